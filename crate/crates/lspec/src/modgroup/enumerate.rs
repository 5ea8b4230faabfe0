//! Deterministic enumeration of PGL2(F_q[Y]) by entry degree.

use crate::algebra::{Field, Poly};

use super::GroupElement;

/// Every normalized element whose entries have degree `<= degree_bound`,
/// each once: layer by layer in the largest entry degree, lexicographically on
/// `(a, b, c, d)` within a layer.
pub fn enumerate_group(field: Field, degree_bound: usize) -> Vec<GroupElement> {
    let polys = Poly::all_up_to_degree(field, degree_bound);
    let units: Vec<u16> = field.units().collect();
    let mut out = Vec::new();
    for a in &polys {
        for b in &polys {
            // first nonzero entry of the row is monic
            let first = if !a.is_zero() { a } else { b };
            if first.is_zero() || !first.is_monic() {
                continue;
            }
            if a.is_zero() {
                // -b c = u forces constant b = 1, c = -u
                if b.deg() != 0 {
                    continue;
                }
                for &u in &units {
                    let c = Poly::constant(field, field.neg(u));
                    for d in &polys {
                        out.push(GroupElement::new(a.clone(), b.clone(), c.clone(), d.clone()).unwrap());
                    }
                }
                continue;
            }
            for c in &polys {
                let bc = b.mul(c);
                for &u in &units {
                    // a d = u + b c
                    let rhs = bc.add(&Poly::constant(field, u));
                    if let Some(d) = rhs.div_exact(a) {
                        if d.deg_opt().unwrap_or(0) <= degree_bound {
                            out.push(GroupElement::new(a.clone(), b.clone(), c.clone(), d).unwrap());
                        }
                    }
                }
            }
        }
    }
    out.sort_by(|x, y| x.max_degree().cmp(&y.max_degree()).then_with(|| x.cmp(y)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pgl2_orders() {
        for q in [2u32, 3, 4] {
            let f = Field::with_order(q).unwrap();
            let g = enumerate_group(f, 0);
            assert_eq!(g.len() as u32, q * q * q - q);
            assert_eq!(g.iter().filter(|x| x.is_identity()).count(), 1);
        }
    }
}
