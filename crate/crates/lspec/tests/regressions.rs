//! Frozen values checked against brute force over small group elements.

use lspec::algebra::{ExtInt, Field};
use lspec::btree::{intersection, Intersection, Line};
use lspec::cli::verify::word_axis;
use lspec::contfrac::{periodic_word_to_quadratic, CfWord};
use lspec::modgroup::{enumerate_group, GroupElement};
use lspec::spectrum::{c_alpha_axes, c_alpha_quadratic, hurwitz_estimate_axis, ApproxValue, CertKind, SearchBudget, TargetGenerator};

fn f3() -> Field {
    Field::prime(3).unwrap()
}

/// Longest overlap of `Ax_x` with a translate `g . Ax_α`, `g` of entry degree `<= bound`.
fn brute_force_overlap(group: &[GroupElement], alpha: &str, x: &str) -> i64 {
    let f = f3();
    let a = periodic_word_to_quadratic(&CfWord::parse(f, alpha).unwrap()).unwrap();
    let lx = Line::of_quadratic(&periodic_word_to_quadratic(&CfWord::parse(f, x).unwrap()).unwrap(), 80).unwrap();
    group
        .iter()
        .filter_map(|g| {
            let l = Line::of_quadratic(&g.apply_quadratic(&a).unwrap(), 80).unwrap();
            match intersection(&l, &lx).unwrap() {
                Intersection::Overlap { length: ExtInt::Fin(n), .. } => Some(n),
                Intersection::Disjoint { distance } => Some(-distance),
                _ => None,
            }
        })
        .max()
        .unwrap()
}

#[test]
fn degree_one_cycles_miss_q_minus_2_when_min_degree_is_one() {
    // M = 2, m = 1: no degree-one cycle reaches q^-2
    let group = enumerate_group(f3(), 2);
    let alpha = "[per: Y, Y^2]";
    let ax = word_axis(f3(), alpha).unwrap();
    for (p, n) in [("Y", 4), ("Y+1", 3), ("Y+2", 3)] {
        let x = format!("[per: {p}]");
        assert_eq!(brute_force_overlap(&group, alpha, &x), n, "{x}");
        let (v, cert) = c_alpha_axes(&ax, &word_axis(f3(), &x).unwrap(), &SearchBudget::default()).unwrap();
        assert_eq!((v, cert.kind), (ApproxValue::Pow(-n), CertKind::Exact), "{x}");
    }
    let h = hurwitz_estimate_axis(&ax, &TargetGenerator::default(), &SearchBudget::default()).unwrap();
    assert_eq!(h.value, ApproxValue::Pow(-3));
    assert_eq!(h.upper, -2);
    assert_ne!(h.certificate.kind, CertKind::Exact);
}

#[test]
fn golden_against_degree_one_cycles() {
    let group = enumerate_group(f3(), 2);
    let phi = periodic_word_to_quadratic(&CfWord::parse(f3(), "[per: Y]").unwrap()).unwrap();
    for (p, n) in [("Y+1", 4), ("Y+2", 4), ("Y^2", 2)] {
        let x = format!("[per: {p}]");
        assert_eq!(brute_force_overlap(&group, "[per: Y]", &x), n, "{x}");
        let xq = periodic_word_to_quadratic(&CfWord::parse(f3(), &x).unwrap()).unwrap();
        let (v, _) = c_alpha_quadratic(&phi, &xq, &SearchBudget::default()).unwrap();
        assert_eq!(v, ApproxValue::Pow(-n), "{x}");
    }
}

#[test]
fn golden_hurwitz_constant() {
    let ax = word_axis(f3(), "[per: Y]").unwrap();
    let h = hurwitz_estimate_axis(&ax, &TargetGenerator::default(), &SearchBudget::default()).unwrap();
    assert_eq!((h.value, h.certificate.kind), (ApproxValue::Pow(-2), CertKind::Exact));
    assert_eq!(h.witness.unwrap().to_string(), "[per: Y^2]");
}
