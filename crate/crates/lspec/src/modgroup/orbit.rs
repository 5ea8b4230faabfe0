//! Points of `Γ.{α, α^σ}` reached by bounded enumeration.

use std::collections::BTreeSet;

use crate::algebra::QuadraticIrrational;

use super::enumerate_group;

/// `g.α` and `g.α^σ` for `g` with entry degrees `<= degree_bound`, one per
/// distinct point, keeping those with `v(β - β^σ) >= floor` when given.
pub fn orbit_points(alpha: &QuadraticIrrational, degree_bound: usize, floor: Option<i64>) -> Vec<QuadraticIrrational> {
    let conj = alpha.conjugate();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for g in enumerate_group(alpha.field(), degree_bound) {
        for x in [alpha, &conj] {
            let Ok(b) = g.apply_quadratic(x) else { continue };
            if floor.is_some_and(|fl| b.split() < fl) {
                continue;
            }
            if seen.insert(b.key()) {
                out.push(b);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, Poly};
    use crate::contfrac::{periodic_word_to_quadratic, CfWord};
    use crate::modgroup::GroupElement;

    #[test]
    fn contains_translates() {
        let f = Field::prime(2).unwrap();
        let phi = periodic_word_to_quadratic(&CfWord::parse(f, "[per: Y]").unwrap()).unwrap();
        let pts = orbit_points(&phi, 1, None);
        for p in Poly::all_up_to_degree(f, 1) {
            let t = GroupElement::translation(&p).apply_quadratic(&phi).unwrap();
            assert!(pts.iter().any(|b| b.same_root(&t)));
        }
        let keys: BTreeSet<_> = pts.iter().map(|b| b.key()).collect();
        assert_eq!(keys.len(), pts.len());
    }
}
