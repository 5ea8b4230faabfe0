//! Elements of PGL2(F_q[Y]) and their action by homographies.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{parse_poly, Field, Poly, QuadraticIrrational, RatFunc, Series};
use crate::btree::{BoundaryPoint, Vertex};
use crate::contfrac::{cf_expand_quadratic, cf_expand_rational, periodic_word_to_quadratic, CfWord};
use crate::error::{Error, Result};

/// `[a b; c d]` with unit determinant, scaled so that the first nonzero entry
/// (row-major) is monic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    a: Poly,
    b: Poly,
    c: Poly,
    d: Poly,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} , {} ; {} , {}]", self.a, self.b, self.c, self.d)
    }
}

impl GroupElement {
    pub fn new(a: Poly, b: Poly, c: Poly, d: Poly) -> Result<GroupElement> {
        let det = a.mul(&d).sub(&b.mul(&c));
        if det.deg_opt() != Some(0) {
            return Err(Error::Domain(format!("determinant {det} is not a unit")));
        }
        Ok(GroupElement::normalized(a, b, c, d))
    }

    fn normalized(a: Poly, b: Poly, c: Poly, d: Poly) -> GroupElement {
        let lead = [&a, &b, &c, &d].iter().find(|p| !p.is_zero()).unwrap().leading();
        let u = a.field().inv(lead);
        GroupElement { a: a.scale(u), b: b.scale(u), c: c.scale(u), d: d.scale(u) }
    }

    pub fn identity(f: Field) -> GroupElement {
        GroupElement { a: Poly::one(f), b: Poly::zero(f), c: Poly::zero(f), d: Poly::one(f) }
    }
    /// `y -> y + p`.
    pub fn translation(p: &Poly) -> GroupElement {
        let f = p.field();
        GroupElement { a: Poly::one(f), b: p.clone(), c: Poly::zero(f), d: Poly::one(f) }
    }
    /// `y -> 1/y`.
    pub fn inversion(f: Field) -> GroupElement {
        GroupElement { a: Poly::zero(f), b: Poly::one(f), c: Poly::one(f), d: Poly::zero(f) }
    }
    /// `[t 1; 1 0]`: `y -> t + 1/y`.
    pub fn cf_step(t: &Poly) -> GroupElement {
        let f = t.field();
        GroupElement::normalized(t.clone(), Poly::one(f), Poly::one(f), Poly::zero(f))
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }
    pub fn entries(&self) -> (&Poly, &Poly, &Poly, &Poly) {
        (&self.a, &self.b, &self.c, &self.d)
    }
    pub fn det(&self) -> u16 {
        self.a.mul(&self.d).sub(&self.b.mul(&self.c)).coeff(0)
    }
    /// Largest entry degree (0 for constant matrices).
    pub fn max_degree(&self) -> usize {
        [&self.a, &self.b, &self.c, &self.d].iter().map(|p| p.deg_opt().unwrap_or(0)).max().unwrap()
    }
    pub fn is_identity(&self) -> bool {
        *self == GroupElement::identity(self.field())
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        GroupElement::normalized(
            self.a.mul(&o.a).add(&self.b.mul(&o.c)),
            self.a.mul(&o.b).add(&self.b.mul(&o.d)),
            self.c.mul(&o.a).add(&self.d.mul(&o.c)),
            self.c.mul(&o.b).add(&self.d.mul(&o.d)),
        )
    }
    pub fn inverse(&self) -> GroupElement {
        GroupElement::normalized(self.d.clone(), self.b.neg(), self.c.neg(), self.a.clone())
    }

    /// Action on `P^1(F_q(Y))`; `None` is `∞`.
    pub fn apply_rational(&self, x: Option<&RatFunc>) -> Option<RatFunc> {
        match x {
            None => (!self.c.is_zero()).then(|| RatFunc::new(self.a.clone(), self.c.clone()).unwrap()),
            Some(r) => {
                let num = self.a.mul(r.num()).add(&self.b.mul(r.den()));
                let den = self.c.mul(r.num()).add(&self.d.mul(r.den()));
                (!den.is_zero()).then(|| RatFunc::new(num, den).unwrap())
            }
        }
    }

    /// Action on boundary points, computing finite images below `cap`.
    pub fn apply_point(&self, x: &BoundaryPoint, cap: i64) -> Result<BoundaryPoint> {
        match x {
            BoundaryPoint::Infinity => Ok(if self.c.is_zero() {
                BoundaryPoint::Infinity
            } else {
                let r = RatFunc::new(self.a.clone(), self.c.clone())?;
                BoundaryPoint::Finite(Series::from_rational(&r, cap))
            }),
            BoundaryPoint::Finite(s) => Ok(match s.mobius(&self.a, &self.b, &self.c, &self.d, cap)? {
                None => BoundaryPoint::Infinity,
                Some(img) => BoundaryPoint::Finite(img),
            }),
        }
    }

    pub fn apply_quadratic(&self, x: &QuadraticIrrational) -> Result<QuadraticIrrational> {
        x.mobius(&self.a, &self.b, &self.c, &self.d)
    }

    /// Action on words through the numbers they expand.
    pub fn apply_word(&self, w: &CfWord) -> Result<CfWord> {
        if w.is_finite() {
            let r = w.evaluate()?;
            let img = self.apply_rational(Some(&r)).ok_or_else(|| Error::Domain("image is ∞".into()))?;
            return Ok(cf_expand_rational(&img));
        }
        let q = periodic_word_to_quadratic(w)?;
        cf_expand_quadratic(&self.apply_quadratic(&q)?, 100_000)
    }

    /// Action on vertices: the image of `B(c, n)`, the median of `∞`, `c` and
    /// `c + Y^{-n}`, is the median of their images.
    pub fn apply_vertex(&self, x: &Vertex) -> Vertex {
        let f = self.field();
        let c = x.center().to_rational();
        let n = x.level();
        let c2 = c.add(&Series::monomial(f, 1, n).to_rational());
        let pts = [self.apply_rational(None), self.apply_rational(Some(&c)), self.apply_rational(Some(&c2))];
        median(&pts)
    }

    pub fn to_json(&self) -> Value {
        json!({"a": self.a.to_string(), "b": self.b.to_string(), "c": self.c.to_string(), "d": self.d.to_string()})
    }
    pub fn from_json(field: Field, v: &Value) -> Result<GroupElement> {
        let get = |k: &str| -> Result<Poly> {
            let s = v.get(k).and_then(Value::as_str).ok_or_else(|| Error::Parse(format!("group element: missing {k}")))?;
            parse_poly(field, s)
        };
        GroupElement::new(get("a")?, get("b")?, get("c")?, get("d")?)
    }
}

/// Median vertex of three distinct points of `P^1(F_q(Y))`.
pub fn median(pts: &[Option<RatFunc>; 3]) -> Vertex {
    let v = |x: &RatFunc, y: &RatFunc| x.sub(y).val().finite().expect("distinct points");
    let vertex = |x: &RatFunc, level: i64| Vertex::new(&Series::from_rational(x, level), level).unwrap();
    let finite: Vec<&RatFunc> = pts.iter().flatten().collect();
    if finite.len() == 2 {
        return vertex(finite[0], v(finite[0], finite[1]));
    }
    let (x, y, z) = (finite[0], finite[1], finite[2]);
    let (vxy, vxz, vyz) = (v(x, y), v(x, z), v(y, z));
    let m = vxy.max(vxz).max(vyz);
    if vyz == m {
        vertex(y, m)
    } else {
        vertex(x, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn inversion_of_y() {
        let f = f3();
        let g = GroupElement::inversion(f);
        let y = BoundaryPoint::Finite(Series::from_poly(&Poly::y(f)));
        let img = g.apply_point(&y, 10).unwrap();
        assert_eq!(img.series().unwrap().as_exact(), Series::monomial(f, 1, 1));
    }

    #[test]
    fn translation_shifts_a0() {
        let f = f3();
        let phi = CfWord::parse(f, "[per: Y]").unwrap();
        let p = parse_poly(f, "Y+2").unwrap();
        let w = GroupElement::translation(&p).apply_word(&phi).unwrap();
        assert_eq!(w.to_string(), "[2*Y+2; per: Y]");
    }

    #[test]
    fn vertex_action() {
        let f = f3();
        let g = GroupElement::inversion(f);
        let b1 = Vertex::new(&Series::zero(f), 1).unwrap();
        assert_eq!(g.apply_vertex(&b1), Vertex::u(f, 1));
        assert_eq!(g.apply_vertex(&Vertex::base(f)), Vertex::base(f));
        let t = GroupElement::translation(&Poly::y(f));
        let img = t.apply_vertex(&Vertex::u(f, 1));
        assert_eq!(img, Vertex::u(f, 1));
        assert_ne!(t.apply_vertex(&Vertex::base(f)), Vertex::base(f));
    }
}
