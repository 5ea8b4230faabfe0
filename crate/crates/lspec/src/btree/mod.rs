//! The Bruhat-Tits tree of PGL2 over F_q((Y^{-1})) in the ball model.
//!
//! The vertex `B(c, n)` is the ball `{x : v(x - c) >= n}`; its parent is
//! `B(c, n - 1)` and its `q` children are `B(c + u Y^{-n}, n + 1)`. The ray
//! from `∞` to `x` is the sequence `B(x, n)`, and the line `]x, y[` consists
//! of `B(x, n)` and `B(y, n)` for `n >= v(x - y)`.

pub mod horoball;
pub mod oracle;

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{DiffVal, ExtInt, Field, QuadraticIrrational, Series};
use crate::error::{precision, Result};
use crate::spectrum::ApproxValue;

pub use horoball::{height_in_horoball, horoball_sequence, Horoball};

/// A point of `P^1(F_q((Y^{-1})))`.
#[derive(Clone, Debug)]
pub enum BoundaryPoint {
    Infinity,
    Finite(Series),
}

impl BoundaryPoint {
    pub fn is_infinity(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }
    pub fn series(&self) -> Option<&Series> {
        match self {
            BoundaryPoint::Finite(s) => Some(s),
            BoundaryPoint::Infinity => None,
        }
    }
    /// `v(x)`, with `v(∞) = -∞`.
    pub fn val(&self) -> Result<ExtInt> {
        match self {
            BoundaryPoint::Infinity => Ok(ExtInt::NegInf),
            BoundaryPoint::Finite(s) => s.val(),
        }
    }
}

/// `v(x - y)` for finite series, `+∞` when both are exactly equal.
pub fn val_diff(x: &Series, y: &Series) -> Result<ExtInt> {
    match x.val_diff(y) {
        DiffVal::At(i) => Ok(ExtInt::Fin(i)),
        DiffVal::Equal => Ok(ExtInt::PosInf),
        DiffVal::AtLeast(h) => Err(precision(format!("points agree on all {h} known digits"))),
    }
}

/// A vertex `B(center, level)`; the center is exact with no digit at index `>= level`.
#[derive(Clone, PartialEq)]
pub struct Vertex {
    level: i64,
    center: Series,
}

impl fmt::Debug for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({:?}, {})", self.center, self.level)
    }
}

impl Vertex {
    pub fn new(center: &Series, level: i64) -> Result<Vertex> {
        if center.horizon() < level {
            return Err(precision(format!("vertex at level {level} needs digits below {level}")));
        }
        Ok(Vertex { level, center: center.truncate(level).as_exact() })
    }
    /// The standard base point `* = B(0, 0)`.
    pub fn base(field: Field) -> Vertex {
        Vertex::u(field, 0)
    }
    /// `u_h = B(0, -h)`, the vertex at height `h` on the ray from `*` to `∞`.
    pub fn u(field: Field, h: i64) -> Vertex {
        Vertex { level: -h, center: Series::zero(field) }
    }
    pub fn level(&self) -> i64 {
        self.level
    }
    pub fn center(&self) -> &Series {
        &self.center
    }
    pub fn field(&self) -> Field {
        self.center.field()
    }
    /// Whether the ball contains `x`.
    pub fn contains(&self, x: &Series) -> Result<bool> {
        match x.val_diff(&self.center) {
            DiffVal::At(i) => Ok(i >= self.level),
            DiffVal::Equal => Ok(true),
            DiffVal::AtLeast(h) if h >= self.level => Ok(true),
            DiffVal::AtLeast(_) => Err(precision("ball membership undetermined")),
        }
    }
    pub fn parent(&self) -> Vertex {
        Vertex { level: self.level - 1, center: self.center.truncate(self.level - 1).as_exact() }
    }
    pub fn children(&self) -> Vec<Vertex> {
        let f = self.field();
        f.elements()
            .map(|u| Vertex { level: self.level + 1, center: self.center.add(&Series::monomial(f, u, self.level)) })
            .collect()
    }
    /// The `q + 1` neighbours.
    pub fn neighbors(&self) -> Vec<Vertex> {
        let mut v = vec![self.parent()];
        v.extend(self.children());
        v
    }
    /// Tree distance `n1 + n2 - 2 min(n1, n2, v(c1 - c2))`.
    pub fn distance(&self, o: &Vertex) -> i64 {
        let m = match self.center.val_diff(&o.center) {
            DiffVal::At(i) => i.min(self.level).min(o.level),
            _ => self.level.min(o.level),
        };
        self.level + o.level - 2 * m
    }
    pub fn to_json(&self) -> Value {
        json!({"level": self.level, "center": self.center.to_json()})
    }
}

/// The vertex at level `n` on the ray `]∞, x[`.
pub fn vertex_on_ray(x: &BoundaryPoint, n: i64) -> Result<Vertex> {
    match x {
        BoundaryPoint::Infinity => Err(crate::error::Error::Domain("ray from ∞ to ∞".into())),
        BoundaryPoint::Finite(s) => Vertex::new(s, n),
    }
}

/// The geodesic line `]a, b[`.
#[derive(Clone, Debug)]
pub struct Line {
    pub a: BoundaryPoint,
    pub b: BoundaryPoint,
}

impl Line {
    pub fn new(a: BoundaryPoint, b: BoundaryPoint) -> Line {
        Line { a, b }
    }
    /// `]β^σ, β[` at the given precision.
    pub fn of_quadratic(beta: &QuadraticIrrational, horizon: i64) -> Result<Line> {
        let s = beta.series(horizon)?.truncate(horizon);
        let c = beta.conjugate().series(horizon)?.truncate(horizon);
        Ok(Line::new(BoundaryPoint::Finite(c), BoundaryPoint::Finite(s)))
    }
    pub fn reversed(&self) -> Line {
        Line { a: self.b.clone(), b: self.a.clone() }
    }
    /// Whether the vertex lies on the line.
    pub fn contains_vertex(&self, x: &Vertex) -> Result<bool> {
        match (&self.a, &self.b) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => Ok(false),
            (BoundaryPoint::Infinity, BoundaryPoint::Finite(s)) | (BoundaryPoint::Finite(s), BoundaryPoint::Infinity) => {
                x.contains(s)
            }
            (BoundaryPoint::Finite(s), BoundaryPoint::Finite(t)) => {
                let top = val_diff(s, t)?;
                Ok(ExtInt::Fin(x.level()) >= top && (x.contains(s)? || x.contains(t)?))
            }
        }
    }
}

/// How two geodesic lines meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Intersection {
    Disjoint { distance: i64 },
    /// Common segment of `length` edges (`PosInf` for a shared endpoint).
    /// `same_orientation` says whether it runs from `a1`/`a2` towards `b1`/`b2`
    /// (otherwise from `a1` towards `b1` and from `b2` towards `a2`).
    Overlap { length: ExtInt, same_orientation: bool },
}

impl Intersection {
    /// Overlap length, or minus the distance when disjoint.
    pub fn signed_length(self) -> ExtInt {
        match self {
            Intersection::Disjoint { distance } => ExtInt::Fin(-distance),
            Intersection::Overlap { length, .. } => length,
        }
    }
}

fn ext_add(x: ExtInt, y: ExtInt) -> ExtInt {
    match (x, y) {
        (ExtInt::Fin(a), ExtInt::Fin(b)) => ExtInt::Fin(a + b),
        (ExtInt::PosInf, _) | (_, ExtInt::PosInf) => ExtInt::PosInf,
        _ => ExtInt::NegInf,
    }
}

/// `v(x - y)` with the convention that terms involving a single `∞` drop out.
fn pair_val(x: &BoundaryPoint, y: &BoundaryPoint) -> Result<ExtInt> {
    match (x, y) {
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => Ok(ExtInt::PosInf),
        (BoundaryPoint::Infinity, _) | (_, BoundaryPoint::Infinity) => Ok(ExtInt::Fin(0)),
        (BoundaryPoint::Finite(s), BoundaryPoint::Finite(t)) => val_diff(s, t),
    }
}

/// Intersection of `]a, b[` and `]c, d[` from the three pairings
/// `X = v(a-c) + v(b-d)`, `Y = v(a-d) + v(b-c)`, `Z = v(a-b) + v(c-d)`.
pub fn intersection(l1: &Line, l2: &Line) -> Result<Intersection> {
    let (a, b, c, d) = (&l1.a, &l1.b, &l2.a, &l2.b);
    let x = ext_add(pair_val(a, c)?, pair_val(b, d)?);
    let y = ext_add(pair_val(a, d)?, pair_val(b, c)?);
    if x == ExtInt::PosInf {
        return Ok(Intersection::Overlap { length: ExtInt::PosInf, same_orientation: true });
    }
    if y == ExtInt::PosInf {
        return Ok(Intersection::Overlap { length: ExtInt::PosInf, same_orientation: false });
    }
    let z = ext_add(pair_val(a, b)?, pair_val(c, d)?);
    let (x, y, z) = (x.finite().unwrap(), y.finite().unwrap(), z.finite().expect("distinct endpoints"));
    Ok(if z > x && z > y {
        Intersection::Disjoint { distance: z - x.max(y) }
    } else if x > z {
        Intersection::Overlap { length: ExtInt::Fin(x - z), same_orientation: true }
    } else if y > z {
        Intersection::Overlap { length: ExtInt::Fin(y - z), same_orientation: false }
    } else {
        Intersection::Overlap { length: ExtInt::Fin(0), same_orientation: true }
    })
}

/// Gromov product `(x|y)` at `u_h`: the length of the common initial part of
/// the rays from `u_h` to `x` and to `y`.
pub fn gromov(x: &BoundaryPoint, y: &BoundaryPoint, h: i64) -> Result<ExtInt> {
    let lift = |p: &BoundaryPoint| -> Result<i64> {
        Ok(match p.val()? {
            ExtInt::Fin(v) => (v + h).min(0),
            ExtInt::PosInf => 0,
            ExtInt::NegInf => 0,
        })
    };
    match (x, y) {
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => Ok(ExtInt::PosInf),
        (BoundaryPoint::Infinity, p) | (p, BoundaryPoint::Infinity) => Ok(ExtInt::Fin(-lift(p)?)),
        (BoundaryPoint::Finite(s), BoundaryPoint::Finite(t)) => Ok(match val_diff(s, t)? {
            ExtInt::Fin(v) => ExtInt::Fin(v + h - lift(x)? - lift(y)?),
            other => other,
        }),
    }
}

/// Overlap of two lines that both pass through `u_h`, with its orientation.
pub fn overlap_at(l1: &Line, l2: &Line, h: i64) -> Result<(ExtInt, bool)> {
    let same = ext_add(gromov(&l1.a, &l2.a, h)?, gromov(&l1.b, &l2.b, h)?);
    let opp = ext_add(gromov(&l1.a, &l2.b, h)?, gromov(&l1.b, &l2.a, h)?);
    Ok(if same >= opp { (same, true) } else { (opp, false) })
}

/// `c(x, β) = |x - β| / |β - β^σ| = q^{v(β - β^σ) - v(x - β)}`.
pub fn c_of(x: &BoundaryPoint, beta: &QuadraticIrrational) -> Result<ApproxValue> {
    let s = beta.split();
    match x {
        BoundaryPoint::Infinity => Ok(ApproxValue::Infinity),
        BoundaryPoint::Finite(xs) => {
            let mut h = s.max(0) + 16;
            loop {
                let b = beta.series(h)?;
                match xs.val_diff(&b) {
                    DiffVal::At(i) => return Ok(ApproxValue::Pow(s - i)),
                    DiffVal::Equal => return Ok(ApproxValue::Zero),
                    DiffVal::AtLeast(k) if k >= xs.horizon() => {
                        return Err(precision("x agrees with β on all its known digits"))
                    }
                    DiffVal::AtLeast(k) => h = 2 * h.max(k),
                }
            }
        }
    }
}

/// Vertices of `line` with level in `lo..=hi`, for oracle checks and dumps.
pub fn line_vertices(line: &Line, lo: i64, hi: i64) -> Result<Vec<Vertex>> {
    let mut out = Vec::new();
    match (&line.a, &line.b) {
        (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => {}
        (BoundaryPoint::Infinity, BoundaryPoint::Finite(x)) | (BoundaryPoint::Finite(x), BoundaryPoint::Infinity) => {
            for n in lo..=hi {
                out.push(Vertex::new(x, n)?);
            }
        }
        (BoundaryPoint::Finite(x), BoundaryPoint::Finite(y)) => {
            let top = val_diff(x, y)?.finite().expect("distinct endpoints");
            for n in top.max(lo)..=hi {
                out.push(Vertex::new(x, n)?);
            }
            for n in (top + 1).max(lo)..=hi {
                out.push(Vertex::new(y, n)?);
            }
        }
    }
    Ok(out)
}

/// JSON dump of the vertices of `line` with level in `lo..=hi`.
pub fn line_window_json(line: &Line, lo: i64, hi: i64) -> Result<Value> {
    let vs = line_vertices(line, lo, hi)?;
    Ok(json!({"lo": lo, "hi": hi, "vertices": vs.iter().map(Vertex::to_json).collect::<Vec<_>>()}))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }
    fn pt(s: Series) -> BoundaryPoint {
        BoundaryPoint::Finite(s)
    }

    #[test]
    fn ray_vertices() {
        let f = f3();
        let x = pt(Series::monomial(f, 1, 1));
        let zero = pt(Series::zero(f));
        assert_eq!(vertex_on_ray(&zero, 0).unwrap(), Vertex::base(f));
        assert_eq!(vertex_on_ray(&x, 1).unwrap(), vertex_on_ray(&zero, 1).unwrap());
        assert_ne!(vertex_on_ray(&x, 2).unwrap(), vertex_on_ray(&zero, 2).unwrap());
        assert_eq!(Vertex::base(f).neighbors().len(), 4);
    }

    #[test]
    fn intersection_examples() {
        let f = f3();
        let inf = BoundaryPoint::Infinity;
        let l1 = Line::new(inf.clone(), pt(Series::zero(f)));
        let l2 = Line::new(inf, pt(Series::monomial(f, 1, 1)));
        assert_eq!(intersection(&l1, &l2).unwrap().signed_length(), ExtInt::PosInf);
        let l3 = Line::new(pt(Series::monomial(f, 1, 1)), pt(Series::monomial(f, 2, 1)));
        assert_eq!(
            intersection(&l1, &l3).unwrap(),
            Intersection::Overlap { length: ExtInt::Fin(0), same_orientation: true }
        );
        // v(β) = 3, v(β - β^σ) = 1
        let b = Series::monomial(f, 1, 3);
        let bs = Series::monomial(f, 1, 1).add(&b);
        let l4 = Line::new(pt(b), pt(bs));
        assert_eq!(
            intersection(&l1, &l4).unwrap(),
            Intersection::Overlap { length: ExtInt::Fin(2), same_orientation: false }
        );
    }

    #[test]
    fn gromov_at_base() {
        let f = f3();
        let x = pt(Series::monomial(f, 1, 2));
        let y = pt(Series::monomial(f, 1, 2).add(&Series::monomial(f, 1, 5)));
        assert_eq!(gromov(&x, &y, 0).unwrap(), ExtInt::Fin(5));
        assert_eq!(gromov(&x, &BoundaryPoint::Infinity, 0).unwrap(), ExtInt::Fin(0));
        let big = pt(Series::monomial(f, 1, -3));
        assert_eq!(gromov(&big, &BoundaryPoint::Infinity, 0).unwrap(), ExtInt::Fin(3));
        assert_eq!(gromov(&big, &BoundaryPoint::Infinity, 1).unwrap(), ExtInt::Fin(2));
    }
}
