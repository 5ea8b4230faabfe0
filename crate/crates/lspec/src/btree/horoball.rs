//! The canonical horoball family `(H_ξ)`, `ξ ∈ P^1(F_q(Y))`: `H_∞` is the set of
//! vertices at level `< 0` and `H_ξ = g^{-1} H_∞` for any `g` with `g ξ = ∞`.

use serde_json::{json, Value};

use crate::algebra::{Poly, RatFunc};
use crate::contfrac::{cf_expand_series, CfWord};
use crate::error::{precision, Error, Result};
use crate::modgroup::GroupElement;

use super::{BoundaryPoint, Vertex};

#[derive(Clone, Debug, PartialEq)]
pub struct Horoball {
    /// `None` is `∞`.
    pub center: Option<RatFunc>,
}

impl Horoball {
    pub fn at_infinity() -> Horoball {
        Horoball { center: None }
    }
    pub fn at(xi: RatFunc) -> Horoball {
        Horoball { center: Some(xi) }
    }

    /// An element of the modular group sending the center to `∞`.
    pub fn to_infinity(&self, f: crate::algebra::Field) -> GroupElement {
        match &self.center {
            None => GroupElement::identity(f),
            Some(xi) => {
                let (p, q) = (xi.num(), xi.den());
                // s P + t Q = 1, so [s t; -Q P] has determinant 1 and sends P/Q to ∞.
                let (_, s, t) = p.ext_gcd(q);
                GroupElement::new(s, t, q.neg(), p.clone()).expect("coprime numerator and denominator")
            }
        }
    }

    pub fn to_json(&self) -> Value {
        match &self.center {
            None => json!({"center": "inf"}),
            Some(r) => json!({"center": {"num": r.num().to_string(), "den": r.den().to_string()}}),
        }
    }
}

/// Height of `x` in `h`, positive exactly inside the horoball.
pub fn height_in_horoball(x: &Vertex, h: &Horoball) -> i64 {
    let g = h.to_infinity(x.field());
    -g.apply_vertex(x).level()
}

/// The horoballs `H_{P_n/Q_n}` crossed by `]∞, f[`, `n = 0..count`, with the
/// penetration depth `deg a_{n+1}` of each. A rational `f` yields fewer entries.
pub fn horoball_sequence(f: &BoundaryPoint, count: usize) -> Result<Vec<(Horoball, i64)>> {
    let x = f.series().ok_or_else(|| Error::Domain("the ray from ∞ to ∞ crosses no horoball".into()))?;
    let exp = cf_expand_series(x, count + 1);
    if exp.coeffs.len() < count + 1 && !exp.terminated {
        return Err(precision(format!("only {} coefficients determined", exp.coeffs.len())));
    }
    sequence_from_coeffs(&exp.coeffs, count)
}

/// As [`horoball_sequence`], reading coefficients from a word.
pub fn horoball_sequence_of_word(w: &CfWord, count: usize) -> Result<Vec<(Horoball, i64)>> {
    sequence_from_coeffs(&w.unroll(count + 1), count)
}

fn sequence_from_coeffs(coeffs: &[Poly], count: usize) -> Result<Vec<(Horoball, i64)>> {
    let n = count.min(coeffs.len().saturating_sub(1));
    if n == 0 {
        return Ok(Vec::new());
    }
    let w = CfWord::finite(coeffs[0].clone(), coeffs[1..].to_vec())?;
    let conv = w.convergents(n - 1)?;
    conv.into_iter()
        .map(|c| {
            let depth = coeffs[c.n + 1].deg() as i64;
            Ok((Horoball::at(RatFunc::new(c.p, c.q)?), depth))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Field, Series};

    #[test]
    fn heights() {
        let f = Field::prime(3).unwrap();
        assert_eq!(height_in_horoball(&Vertex::base(f), &Horoball::at_infinity()), 0);
        assert_eq!(height_in_horoball(&Vertex::u(f, 2), &Horoball::at_infinity()), 2);
        let b1 = Vertex::new(&Series::zero(f), 1).unwrap();
        assert_eq!(height_in_horoball(&b1, &Horoball::at(RatFunc::zero(f))), 1);
    }

    #[test]
    fn penetration_depths() {
        let f = Field::prime(3).unwrap();
        let w = CfWord::parse(f, "[0; per: Y^2, Y]").unwrap();
        let d: Vec<i64> = horoball_sequence_of_word(&w, 5).unwrap().into_iter().map(|x| x.1).collect();
        assert_eq!(d, vec![2, 1, 2, 1, 2]);
        let r = CfWord::finite(Poly::zero(f), vec![Poly::monomial(f, 1, 3)]).unwrap().evaluate().unwrap();
        let x = BoundaryPoint::Finite(Series::from_rational(&r, 20));
        let seq = horoball_sequence(&x, 4).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(seq[0].1, 3);
    }
}
