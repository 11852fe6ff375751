//! End-to-end tests of the command-line interface and its exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ntlab"))
}

fn tmp(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

#[test]
fn construct_then_analyze_golay() {
    let dir = tmp("golay");
    let code_path = dir.join("g24.code");
    let status = bin()
        .args(["construct", "golay24", "-o"])
        .arg(&code_path)
        .status()
        .unwrap();
    assert!(status.success());

    let output = bin()
        .arg("analyze")
        .arg(&code_path)
        .arg("--weights")
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("LINEAR m=24 k=12"), "{text}");
    assert!(text.contains("delta = 8"), "{text}");
    assert!(text.contains("W[8] = 759"), "{text}");
    assert!(text.contains("W[12] = 2576"), "{text}");
}

#[test]
fn constructed_codes_round_trip() {
    let dir = tmp("roundtrip");
    let path = dir.join("rm1_4.code");
    assert!(bin()
        .args(["construct", "rm1", "--t", "4", "-o"])
        .arg(&path)
        .status()
        .unwrap()
        .success());
    let first = std::fs::read_to_string(&path).unwrap();
    // re-emit what was read back: must be byte-identical
    let reread = bin().arg("analyze").arg(&path).arg("--dual").output().unwrap();
    assert!(reread.status.success());
    let again = bin()
        .args(["construct", "rm1", "--t", "4"])
        .output()
        .unwrap();
    assert_eq!(first, stdout(&again));
}

#[test]
fn check_2nt_golay_and_mathieu() {
    let dir = tmp("check2nt");
    let code_path = dir.join("g24.code");
    let group_path = dir.join("m24.perm");
    assert!(bin().args(["construct", "golay24", "-o"]).arg(&code_path).status().unwrap().success());
    assert!(bin()
        .args(["construct", "golay24", "--group", "-o"])
        .arg(&group_path)
        .status()
        .unwrap()
        .success());
    let output = bin()
        .arg("check-2nt")
        .arg(&code_path)
        .arg(&group_path)
        .arg("--oracle")
        .output()
        .unwrap();
    let text = stdout(&output);
    assert!(output.status.success(), "{text}");
    assert!(text.ends_with("VERDICT = PASS\n"), "{text}");
    assert!(text.contains("cells = 4096 98304 1130496"), "{text}");
}

#[test]
fn check_2nt_rejects_perfect_code() {
    let dir = tmp("check2nt_fail");
    let code_path = dir.join("hamming.code");
    let group_path = dir.join("psl.perm");
    assert!(bin()
        .args(["construct", "hamming", "--t", "3", "-o"])
        .arg(&code_path)
        .status()
        .unwrap()
        .success());
    assert!(bin()
        .args(["construct", "hamming", "--t", "3", "--group", "-o"])
        .arg(&group_path)
        .status()
        .unwrap()
        .success());
    let output = bin().arg("check-2nt").arg(&code_path).arg(&group_path).output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).ends_with("VERDICT = FAIL\n"));
}

#[test]
fn verify_table_summary_line() {
    let output = bin()
        .args(["verify-table", "--line", "2", "--t", "4", "--summary"])
        .output()
        .unwrap();
    assert!(output.status.success());
    assert_eq!(stdout(&output), "2 t=4 16 5 8 PASS\n");
}

#[test]
fn census_summary_is_stable() {
    let first = bin().args(["census", "--summary"]).output().unwrap();
    let second = bin().args(["census", "--summary"]).output().unwrap();
    assert!(first.status.success());
    assert_eq!(stdout(&first), stdout(&second));
    // skipped data rows are reported, never silently dropped
    let text = stdout(&first);
    assert!(text.contains("14 - - - - SKIPPED"), "{text}");
    assert!(text.lines().count() >= 24, "{text}");
}

#[test]
fn census_with_corrupted_group_file_fails() {
    // negative control: a data directory whose m24 generators are swapped
    // must fail row 13 with an invariance witness
    let dir = tmp("corrupt_data");
    let groups = dir.join("groups");
    std::fs::create_dir_all(&groups).unwrap();
    let source = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/groups");
    for name in ["m22.perm", "m23.perm", "alt7_15.perm"] {
        std::fs::copy(source.join(name), groups.join(name)).unwrap();
    }
    let m24 = std::fs::read_to_string(source.join("m24.perm")).unwrap();
    // swap two points in the first generator: still a permutation, no
    // longer an automorphism of the code
    let corrupted: Vec<String> = m24
        .lines()
        .map(|line| {
            if line.starts_with("1 2 3") {
                let mut fields: Vec<&str> = line.split_whitespace().collect();
                fields.swap(0, 1);
                fields.join(" ")
            } else {
                line.to_string()
            }
        })
        .collect();
    std::fs::write(groups.join("m24.perm"), corrupted.join("\n") + "\n").unwrap();

    let output = bin()
        .env("NTLAB_DATA", &dir)
        .args(["verify-table", "--line", "13"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("not invariant"), "{text}");
    assert!(text.ends_with("VERDICT = FAIL\n"), "{text}");
}

#[test]
fn spin_prints_dimension_and_rows() {
    let dir = tmp("spin");
    let group_path = dir.join("aff23.perm");
    assert!(bin()
        .args(["construct", "qr", "--r", "23", "--group", "-o"])
        .arg(&group_path)
        .status()
        .unwrap()
        .success());
    // residue indicator mod 23
    let mut residue = vec!['0'; 23];
    for x in 1..23usize {
        residue[x * x % 23] = '1';
    }
    let seed: String = residue.into_iter().collect();
    let output = bin()
        .arg("spin")
        .arg(&group_path)
        .args(["--seed", &seed])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.starts_with("dimension = 12"), "{text}");
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn design_subcommand_certifies_octads() {
    let dir = tmp("design");
    let code_path = dir.join("g24.code");
    assert!(bin().args(["construct", "golay24", "-o"]).arg(&code_path).status().unwrap().success());
    let output = bin()
        .arg("design")
        .arg(&code_path)
        .args(["--weight", "8"])
        .output()
        .unwrap();
    assert!(output.status.success());
    let text = stdout(&output);
    assert!(text.contains("b = 759"), "{text}");
    assert!(text.contains("lambda = 77"), "{text}");
    assert!(text.contains("r = 253"), "{text}");
    let output5 = bin()
        .arg("design")
        .arg(&code_path)
        .args(["--weight", "8", "--t", "5"])
        .output()
        .unwrap();
    assert!(output5.status.success());
    assert!(stdout(&output5).contains("lambda = 1"));
}

#[test]
fn parse_errors_exit_2() {
    let dir = tmp("badfile");
    let path = dir.join("bad.code");
    std::fs::write(&path, "LINEAR 4 1\n01x0\n").unwrap();
    let output = bin().arg("analyze").arg(&path).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn unknown_flags_exit_2() {
    let output = bin().args(["census", "--frobnicate"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn budget_violation_names_the_limit() {
    let dir = tmp("budget");
    let path = dir.join("big.code");
    // a [40, 40] identity code: weight enumeration exceeds the budget
    let mut text = String::from("LINEAR 40 40\n");
    for i in 0..40 {
        let mut row = vec!['0'; 40];
        row[i] = '1';
        text.push_str(&row.iter().collect::<String>());
        text.push('\n');
    }
    std::fs::write(&path, text).unwrap();
    let output = bin().arg("analyze").arg(&path).arg("--weights").output().unwrap();
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8_lossy(&output.stderr);
    assert!(err.contains("2^28"), "{err}");
}
