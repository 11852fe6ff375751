//! Certification of the bundled group data files: every file must carry a
//! provenance comment, parse in the documented format, have the advertised
//! group order and transitivity, and stabilize its catalog code.

use ntlab::catalog::{CodeFamily, GroupFamily};
use ntlab::fileio;
use num_bigint::BigUint;

fn data_group_text(name: &str) -> String {
    let path = fileio::data_dir().join("groups").join(format!("{name}.perm"));
    std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing bundled file {path:?}"))
}

fn assert_linear_invariant(family: CodeFamily, group: &ntlab::perm::PermGroup) {
    let code = family.construct().unwrap();
    let linear = code.as_linear().expect("catalog code is linear");
    assert!(
        group.is_invariant_linear(linear).unwrap(),
        "{} must stabilize {}",
        group.degree(),
        family.name()
    );
}

#[test]
fn every_bundled_file_has_a_source_line() {
    for name in ["m22", "m23", "m24", "alt7_15"] {
        let text = data_group_text(name);
        assert!(
            text.lines().any(|l| l.starts_with("# source:")),
            "{name}.perm lacks a provenance comment"
        );
    }
}

#[test]
fn m24_order_transitivity_and_invariance() {
    let group = GroupFamily::Mathieu { n: 24 }.construct().unwrap();
    assert_eq!(group.degree(), 24);
    assert_eq!(group.order(), BigUint::from(244_823_040u64));
    assert!(group.transitivity_profile().is_2_transitive);
    assert_linear_invariant(CodeFamily::Golay24, &group);
}

#[test]
fn m23_order_transitivity_and_invariance() {
    let group = GroupFamily::Mathieu { n: 23 }.construct().unwrap();
    assert_eq!(group.degree(), 23);
    assert_eq!(group.order(), BigUint::from(10_200_960u64));
    assert!(group.transitivity_profile().is_2_transitive);
    assert_linear_invariant(CodeFamily::Golay23, &group);
    assert_linear_invariant(CodeFamily::Golay23Even, &group);
}

#[test]
fn m22_order_transitivity_and_invariance() {
    let group = GroupFamily::Mathieu { n: 22 }.construct().unwrap();
    assert_eq!(group.degree(), 22);
    assert_eq!(group.order(), BigUint::from(443_520u64));
    assert!(group.transitivity_profile().is_2_transitive);
    assert_linear_invariant(CodeFamily::M22Code, &group);
}

#[test]
fn alt7_order_transitivity_and_invariance() {
    let group = GroupFamily::Alt7On15.construct().unwrap();
    assert_eq!(group.degree(), 15);
    assert_eq!(group.order(), BigUint::from(2520u32));
    assert!(group.transitivity_profile().is_2_transitive);
    assert_linear_invariant(CodeFamily::PgComplement { t: 4, k: 1 }, &group);
}

#[test]
fn m24_divisibility() {
    let group = GroupFamily::Mathieu { n: 24 }.construct().unwrap();
    // 276 pairs divide the group order
    assert!(group.codeword_stabilizer_divisibility());
}

#[test]
fn absent_slots_report_missing_data() {
    for family in [GroupFamily::HigmanSims, GroupFamily::Co3, GroupFamily::Ree { r: 3 }] {
        match family.construct() {
            Err(ntlab::error::Error::MissingData { .. }) => {}
            other => panic!("expected missing-data for {}, got {other:?}", family.name()),
        }
    }
}
