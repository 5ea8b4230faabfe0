//! Axes of loxodromic elements attached to quadratic irrationals.

use crate::algebra::{Poly, QuadraticIrrational};
use crate::btree::{Line, Vertex};
use crate::contfrac::{cf_expand_quadratic, CfWord};
use crate::error::{Error, Result};

use super::{ray_stabilizer_order, reduce_to_ray, GroupElement};

/// Expansion budget used when an axis needs the word of its endpoint.
pub const AXIS_EXPANSION_BUDGET: usize = 100_000;

/// The axis `]α^σ, α[` with the primitive loxodromic `γ_α` translating along it.
#[derive(Clone, Debug)]
pub struct Axis {
    pub alpha: QuadraticIrrational,
    pub word: CfWord,
    pub gamma: GroupElement,
    /// Translation length `2 Σ deg c_i` over the primitive period.
    pub length: i64,
    /// `M(a_0) M(p_1) .. M(p_r)`, sending `[per: c]` to `α`.
    pub frame: GroupElement,
}

/// A vertex `frame . u_h` of one period of an axis, together with the
/// translate of the axis seen from that frame.
#[derive(Clone, Debug)]
pub struct DomainVertex {
    pub frame: GroupElement,
    pub h: i64,
    /// Index of the crossing in the period.
    pub crossing: usize,
    /// The polynomial `c^{>h}` subtracted on the `α` side, zero on the `σ` side.
    pub shift: Poly,
}

impl Axis {
    pub fn line(&self, horizon: i64) -> Result<Line> {
        Line::of_quadratic(&self.alpha, horizon)
    }
    pub fn cycle(&self) -> &[Poly] {
        self.word.period()
    }

    /// The `ℓ` vertices of one period, in order along the axis from `α^σ`
    /// to `α`. Crossing `j` contributes `F_j u_h` for `h = 0..=d_j` and
    /// `F_j T(c_j^{>h}) u_h` for `h = d_j - 1 .. 1`, where `F_j` is the frame
    /// times `M(c_0) .. M(c_{j-1})`.
    pub fn fundamental_domain(&self) -> Vec<DomainVertex> {
        let f = self.alpha.field();
        let mut out = Vec::new();
        let mut fj = self.frame.clone();
        for (j, c) in self.cycle().iter().enumerate() {
            let d = c.deg() as i64;
            for h in 0..=d {
                out.push(DomainVertex { frame: fj.clone(), h, crossing: j, shift: Poly::zero(f) });
            }
            for h in (1..d).rev() {
                let shift = c.above(h as usize);
                out.push(DomainVertex { frame: fj.mul(&GroupElement::translation(&shift)), h, crossing: j, shift });
            }
            fj = fj.mul(&GroupElement::cf_step(c));
        }
        out
    }

    /// `k_α`: the least stabilizer order over one period of the axis.
    pub fn min_stabilizer_order(&self) -> u64 {
        let q = self.alpha.field().q() as u64;
        self.fundamental_domain().iter().map(|v| ray_stabilizer_order(q, v.h)).min().unwrap()
    }
}

impl DomainVertex {
    pub fn vertex(&self) -> Vertex {
        self.frame.apply_vertex(&Vertex::u(self.frame.field(), self.h))
    }
}

/// Builds the axis of `α` from its expansion.
pub fn axis_of(alpha: &QuadraticIrrational) -> Result<Axis> {
    let word = cf_expand_quadratic(alpha, AXIS_EXPANSION_BUDGET)?;
    axis_of_word(alpha, word)
}

impl Axis {
    /// The axis of `alpha` when its expansion `word` is already known.
    pub fn from_word(alpha: &QuadraticIrrational, word: CfWord) -> Result<Axis> {
        axis_of_word(alpha, word)
    }
}

fn axis_of_word(alpha: &QuadraticIrrational, word: CfWord) -> Result<Axis> {
    let f = alpha.field();
    if word.is_finite() {
        return Err(Error::NotQuadratic);
    }
    let mut frame = GroupElement::cf_step(word.a0());
    for p in word.preperiod() {
        frame = frame.mul(&GroupElement::cf_step(p));
    }
    let mut pi = GroupElement::identity(f);
    let mut length = 0i64;
    for c in word.period() {
        pi = pi.mul(&GroupElement::cf_step(c));
        length += 2 * c.deg() as i64;
    }
    let gamma = frame.mul(&pi).mul(&frame.inverse());
    let img = gamma.apply_quadratic(alpha)?;
    if !img.same_root(alpha) {
        return Err(Error::Domain("period product does not fix α".into()));
    }
    Ok(Axis { alpha: alpha.clone(), word, gamma, length, frame })
}

/// Height reached by greedy reduction, a check on the fundamental domain.
pub fn reduced_height(v: &Vertex) -> i64 {
    reduce_to_ray(v).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::contfrac::periodic_word_to_quadratic;

    fn axis(f: Field, text: &str) -> Axis {
        let w = CfWord::parse(f, text).unwrap();
        axis_of(&periodic_word_to_quadratic(&w).unwrap()).unwrap()
    }

    #[test]
    fn golden_axis() {
        let f = Field::prime(3).unwrap();
        let ax = axis(f, "[per: Y]");
        assert_eq!(ax.length, 2);
        assert_eq!(ax.gamma, GroupElement::cf_step(&Poly::y(f)));
        assert_eq!(axis(f, "[per: Y^2]").length, 4);
        assert_eq!(axis(f, "[per: Y, Y^2]").length, 6);
    }

    #[test]
    fn domain_lies_on_axis() {
        let f = Field::prime(3).unwrap();
        for text in ["[per: Y]", "[per: Y^3+1, Y]", "[Y; 2*Y^2, per: Y^2+Y, 2*Y]"] {
            let ax = axis(f, text);
            let line = ax.line(60).unwrap();
            let dom = ax.fundamental_domain();
            assert_eq!(dom.len() as i64, ax.length);
            let mut seen = Vec::new();
            for dv in &dom {
                let v = dv.vertex();
                assert!(line.contains_vertex(&v).unwrap(), "{text}: {v:?}");
                assert_eq!(reduced_height(&v), dv.h);
                assert!(!seen.contains(&v));
                seen.push(v);
            }
            // the next period starts at the γ-image of the first vertex
            let first = dom[0].vertex();
            assert_eq!(ax.gamma.apply_vertex(&first).distance(&first), ax.length);
            assert_eq!(ax.min_stabilizer_order(), 2 * 9);
        }
    }
}
