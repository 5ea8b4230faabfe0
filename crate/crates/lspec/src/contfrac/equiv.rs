//! Deciding whether two eventually periodic words expand points of the same
//! orbit `Γ.{α, α^σ}`.

use serde_json::{json, Value};

use crate::algebra::{mobius_triple, Field, Poly};
use crate::error::{Error, Result};
use crate::modgroup::{enumerate_group, Axis, GroupElement};
use crate::spectrum::{engine_a, EngineAOutcome, SearchBudget};

use super::{periodic_word_to_quadratic, CfWord};

/// How an equivalence was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EquivPath {
    /// Rotation, reversal and alternating unit twist of the period.
    FastPath,
    /// Bounded enumeration of the group.
    Enumeration,
    /// Exhaustive pairing of the axes.
    AxisPairing,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// `witness . x1 ∈ {x2, x2^σ}` up to conjugating `x1`.
    Equivalent { witness: GroupElement, path: EquivPath },
    /// The axes never share more than `max_overlap` edges.
    Inequivalent { max_overlap: i64 },
    Unknown,
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }
    pub fn to_json(&self) -> Value {
        match self {
            Equivalence::Equivalent { witness, path } => {
                json!({"equivalent": true, "witness": witness.to_json(), "path": format!("{path:?}")})
            }
            Equivalence::Inequivalent { max_overlap } => json!({"equivalent": false, "max_overlap": max_overlap}),
            Equivalence::Unknown => json!({"equivalent": null}),
        }
    }
}

/// `u^{(-1)^i}`.
fn twist_unit(f: Field, u: u16, i: usize) -> u16 {
    if i.is_multiple_of(2) {
        u
    } else {
        f.inv(u)
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The cycle read from rotation `j`, optionally reversed (`c_{j-1}, c_{j-2}, ..`),
/// and twisted by `u`, over `len` terms.
fn transformed(cycle: &[Poly], j: usize, reversed: bool, u: u16, len: usize) -> Vec<Poly> {
    let k = cycle.len();
    let f = cycle[0].field();
    (0..len)
        .map(|i| {
            let idx = if reversed { (j + k * len - 1 - i) % k } else { (j + i) % k };
            cycle[idx].scale(twist_unit(f, u, i))
        })
        .collect()
}

/// Canonical key of a cycle under rotation, reversal and alternating twists:
/// the least transformed sequence of length `2k`.
pub fn cycle_class_key(cycle: &[Poly]) -> Vec<Poly> {
    let f = cycle[0].field();
    let k = cycle.len();
    let mut best: Option<Vec<Poly>> = None;
    for reversed in [false, true] {
        for u in f.units() {
            for j in 0..k {
                let t = transformed(cycle, j, reversed, u, 2 * k);
                if best.as_ref().is_none_or(|b| t < *b) {
                    best = Some(t);
                }
            }
        }
    }
    best.unwrap()
}

/// `M(c_0) .. M(c_{j-1})`.
fn prefix_product(cycle: &[Poly], j: usize) -> GroupElement {
    let mut g = GroupElement::identity(cycle[0].field());
    for c in &cycle[..j] {
        g = g.mul(&GroupElement::cf_step(c));
    }
    g
}

fn frame(w: &CfWord) -> GroupElement {
    let mut g = GroupElement::cf_step(w.a0());
    for p in w.preperiod() {
        g = g.mul(&GroupElement::cf_step(p));
    }
    g
}

fn fast_path(w1: &CfWord, w2: &CfWord) -> Result<Option<GroupElement>> {
    let (c1, c2) = (w1.period(), w2.period());
    let f = w1.field();
    let (k1, k2) = (c1.len(), c2.len());
    let len = 2 * k1 / gcd(k1, k2) * k2;
    let q1 = periodic_word_to_quadratic(w1)?;
    let q2 = periodic_word_to_quadratic(w2)?;
    let (n1, n2) = (frame(w1), frame(w2));
    let target: Vec<Poly> = (0..len).map(|i| c2[i % k2].clone()).collect();
    for reversed in [false, true] {
        for u in f.units() {
            for j in 0..k1 {
                if transformed(c1, j, reversed, u, len) != target {
                    continue;
                }
                let du = GroupElement::new(
                    Poly::constant(f, u),
                    Poly::zero(f),
                    Poly::zero(f),
                    Poly::one(f),
                )?;
                let fj = prefix_product(c1, j);
                let mut g = n2.mul(&du);
                if reversed {
                    let jm = GroupElement::new(Poly::zero(f), Poly::one(f).neg(), Poly::one(f), Poly::zero(f))?;
                    g = g.mul(&jm);
                }
                let g = g.mul(&fj.inverse()).mul(&n1.inverse());
                let src = if reversed { q1.conjugate() } else { q1.clone() };
                let img = g.apply_quadratic(&src)?;
                if img.same_root(&q2) || img.same_root(&q2.conjugate()) {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}

/// Decides orbit equivalence: first the fast path, then enumeration up to
/// `search_bound`, then the exhaustive axis pairing when it fits the budget.
pub fn gamma_equivalent(w1: &CfWord, w2: &CfWord, search_bound: usize, budget: &SearchBudget) -> Result<Equivalence> {
    if w1.is_finite() || w2.is_finite() {
        return Err(Error::Domain("orbit equivalence needs periodic words".into()));
    }
    if let Some(g) = fast_path(w1, w2)? {
        return Ok(Equivalence::Equivalent { witness: g, path: EquivPath::FastPath });
    }
    let q1 = periodic_word_to_quadratic(w1)?;
    let q2 = periodic_word_to_quadratic(w2)?;
    let t2 = q2.triple();
    let (a, b, c) = q1.triple();
    for g in enumerate_group(w1.field(), search_bound) {
        let (ga, gb, gc, gd) = g.entries();
        if mobius_triple((&a, &b, &c), (ga, gb, gc, gd)) != t2 {
            continue;
        }
        let img = g.apply_quadratic(&q1)?;
        if img.same_root(&q2) || img.same_root(&q2.conjugate()) {
            return Ok(Equivalence::Equivalent { witness: g, path: EquivPath::Enumeration });
        }
    }
    let ax1 = Axis::from_word(&q1, w1.clone())?;
    let ax2 = Axis::from_word(&q2, w2.clone())?;
    let work = ax1.length as u64 * ax2.length as u64 * (w1.field().q() as u64).pow(3);
    if work > budget.max_steps {
        return Ok(Equivalence::Unknown);
    }
    match engine_a(&ax2, &ax1, budget) {
        Ok(EngineAOutcome::Equivalent(g)) => Ok(Equivalence::Equivalent { witness: g, path: EquivPath::AxisPairing }),
        Ok(EngineAOutcome::Finite(r)) => Ok(Equivalence::Inequivalent { max_overlap: r.n }),
        Err(Error::BudgetExceeded { .. }) | Err(Error::InsufficientPrecision(_)) => Ok(Equivalence::Unknown),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(f: Field, a: &str, b: &str) -> Equivalence {
        let w1 = CfWord::parse(f, a).unwrap();
        let w2 = CfWord::parse(f, b).unwrap();
        gamma_equivalent(&w1, &w2, 1, &SearchBudget::default()).unwrap()
    }

    #[test]
    fn rotations_and_identity() {
        let f = Field::prime(3).unwrap();
        assert!(eq(f, "[per: Y, Y^2]", "[per: Y, Y^2]").is_equivalent());
        assert!(eq(f, "[per: Y, Y^2]", "[per: Y^2, Y]").is_equivalent());
        assert!(eq(f, "[Y+1; per: Y]", "[per: Y]").is_equivalent());
        assert!(eq(f, "[0; Y^3, per: Y^2, Y]", "[per: Y, Y^2]").is_equivalent());
    }

    #[test]
    fn unit_twist_fixture() {
        // 2 is not a square mod 3; the twist y -> 2y still relates the two
        let f = Field::prime(3).unwrap();
        match eq(f, "[per: Y]", "[per: 2*Y]") {
            Equivalence::Equivalent { witness, path } => {
                assert_eq!(path, EquivPath::FastPath);
                assert_eq!(witness.max_degree(), 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn certified_inequivalence() {
        let f = Field::prime(3).unwrap();
        assert_eq!(eq(f, "[per: Y]", "[per: Y^2]"), Equivalence::Inequivalent { max_overlap: 2 });
        assert!(!eq(f, "[per: Y^2, Y]", "[per: Y^2, Y+1]").is_equivalent());
    }

    #[test]
    fn class_keys() {
        let f = Field::prime(3).unwrap();
        let p = |s: &str| crate::algebra::parse_poly(f, s).unwrap();
        assert_eq!(cycle_class_key(&[p("Y"), p("Y^2")]), cycle_class_key(&[p("Y^2"), p("Y")]));
        assert_eq!(cycle_class_key(&[p("Y"), p("Y^2")]), cycle_class_key(&[p("2*Y"), p("2*Y^2")]));
        assert_ne!(cycle_class_key(&[p("Y")]), cycle_class_key(&[p("Y^2")]));
    }
}
