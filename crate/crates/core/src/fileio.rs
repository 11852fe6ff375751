//! Bit-exact file formats for codes and permutation groups.
//!
//! Code files: first non-comment line `LINEAR m k` or `SET m n`, then k
//! (resp. n) lines of exactly m characters from {0,1}. Group files: first
//! non-comment line `PERM m g`, then g lines of m space-separated integers,
//! the i-th integer being the image of point i. Everything is ASCII,
//! 0-indexed, and newline-terminated; `#`-prefixed comment lines are
//! permitted anywhere.

use std::fmt::Write as _;
use std::path::Path;

use crate::code::{Code, LinearCode, UnrestrictedCode};
use crate::error::{Error, Result};
use crate::f2::{BitMatrix, BitVec};
use crate::perm::{PermGroup, Permutation};

fn parse_err(path: &str, line: usize, message: impl Into<String>) -> Error {
    Error::Parse { path: path.into(), line, message: message.into() }
}

/// Lines with 1-based numbers, comments and blanks skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

pub fn parse_code(text: &str, path: &str) -> Result<Code> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 {
        return Err(parse_err(path, ln, "expected `LINEAR m k` or `SET m n`"));
    }
    let m: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(path, ln, "bad length field"))?;
    let count: usize = fields[2]
        .parse()
        .map_err(|_| parse_err(path, ln, "bad row count field"))?;
    let mut rows = Vec::with_capacity(count);
    for _ in 0..count {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(path, 0, format!("expected {count} rows, file ended early")))?;
        let line = line.trim();
        if line.len() != m {
            return Err(parse_err(path, ln, format!("row has {} characters, expected {m}", line.len())));
        }
        let v = BitVec::from_bitstring(line).map_err(|e| match e {
            Error::Parse { message, .. } => parse_err(path, ln, message),
            other => other,
        })?;
        rows.push(v);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(path, ln, "trailing content after declared rows"));
    }
    match fields[0] {
        // dependent rows are tolerated: external files may carry redundant
        // spanning sets, and the canonical dimension is recomputed anyway
        "LINEAR" => Ok(Code::Linear(LinearCode::from_generator(BitMatrix::from_rows(m, rows)?))),
        "SET" => Ok(Code::Words(UnrestrictedCode::new(m, rows)?)),
        other => Err(parse_err(path, ln, format!("unknown code kind {other:?}"))),
    }
}

pub fn render_code(code: &Code) -> String {
    let mut out = String::new();
    match code {
        Code::Linear(c) => {
            writeln!(out, "LINEAR {} {}", c.length(), c.dimension()).unwrap();
            for row in c.generator().rows() {
                writeln!(out, "{}", row.to_bitstring()).unwrap();
            }
        }
        Code::Words(c) => {
            writeln!(out, "SET {} {}", c.length(), c.size()).unwrap();
            for w in c.words() {
                writeln!(out, "{}", w.to_bitstring()).unwrap();
            }
        }
    }
    out
}

pub fn parse_group(text: &str, path: &str) -> Result<PermGroup> {
    let mut lines = content_lines(text);
    let (ln, header) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file"))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 3 || fields[0] != "PERM" {
        return Err(parse_err(path, ln, "expected `PERM m g`"));
    }
    let m: usize = fields[1]
        .parse()
        .map_err(|_| parse_err(path, ln, "bad degree field"))?;
    let count: usize = fields[2]
        .parse()
        .map_err(|_| parse_err(path, ln, "bad generator count field"))?;
    let mut gens = Vec::with_capacity(count);
    for _ in 0..count {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(path, 0, format!("expected {count} generators, file ended early")))?;
        let images: Vec<usize> = line
            .split_whitespace()
            .map(|f| f.parse::<usize>().map_err(|_| parse_err(path, ln, format!("bad image {f:?}"))))
            .collect::<Result<_>>()?;
        if images.len() != m {
            return Err(parse_err(path, ln, format!("generator has {} images, expected {m}", images.len())));
        }
        let p = Permutation::new(images).map_err(|e| match e {
            Error::Parse { message, .. } => parse_err(path, ln, message),
            other => other,
        })?;
        gens.push(p);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(path, ln, "trailing content after declared generators"));
    }
    PermGroup::new(m, gens)
}

pub fn render_group(group: &PermGroup) -> String {
    let mut out = String::new();
    writeln!(out, "PERM {} {}", group.degree(), group.generators().len()).unwrap();
    for g in group.generators() {
        let images: Vec<String> = g.images().iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", images.join(" ")).unwrap();
    }
    out
}

pub fn read_code(path: &Path) -> Result<Code> {
    let text = std::fs::read_to_string(path)?;
    parse_code(&text, &path.display().to_string())
}

pub fn write_code(path: &Path, code: &Code) -> Result<()> {
    std::fs::write(path, render_code(code))?;
    Ok(())
}

pub fn read_group(path: &Path) -> Result<PermGroup> {
    let text = std::fs::read_to_string(path)?;
    parse_group(&text, &path.display().to_string())
}

pub fn write_group(path: &Path, group: &PermGroup) -> Result<()> {
    std::fs::write(path, render_group(group))?;
    Ok(())
}

/// Data directory resolution: `NTLAB_DATA`, then `./data`, then the
/// bundled directory next to the workspace manifest.
pub fn data_dir() -> std::path::PathBuf {
    if let Ok(dir) = std::env::var("NTLAB_DATA") {
        return dir.into();
    }
    let cwd = std::path::PathBuf::from("data");
    if cwd.is_dir() {
        return cwd;
    }
    std::path::PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data"))
}

/// Files in the data directory must document where they came from.
fn check_source_comment(text: &str, path: &std::path::Path) -> Result<()> {
    if text.lines().any(|l| l.trim_start().starts_with("# source:")) {
        Ok(())
    } else {
        Err(Error::Parse {
            path: path.display().to_string(),
            line: 1,
            message: "data files require a `# source:` provenance comment".into(),
        })
    }
}

/// Load a bundled group file by name (`data/groups/<name>.perm`), or report
/// missing data.
pub fn load_data_group(name: &str) -> Result<PermGroup> {
    let path = data_dir().join("groups").join(format!("{name}.perm"));
    if !path.is_file() {
        return Err(Error::MissingData {
            path: path.display().to_string(),
            hint: format!("supply generators for {name} in the group file format"),
        });
    }
    let text = std::fs::read_to_string(&path)?;
    check_source_comment(&text, &path)?;
    parse_group(&text, &path.display().to_string())
}

/// Load a bundled code file by name (`data/codes/<name>.code`).
pub fn load_data_code(name: &str) -> Result<Code> {
    let path = data_dir().join("codes").join(format!("{name}.code"));
    if !path.is_file() {
        return Err(Error::MissingData {
            path: path.display().to_string(),
            hint: format!("supply {name} in the code file format"),
        });
    }
    let text = std::fs::read_to_string(&path)?;
    check_source_comment(&text, &path)?;
    parse_code(&text, &path.display().to_string())
}
