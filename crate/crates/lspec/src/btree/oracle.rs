//! Slow reference computations of `c(x, β)` used to cross-check [`c_of`](super::c_of).

use crate::algebra::{ExtInt, QuadraticIrrational, Series};
use crate::error::{precision, Error, Result};
use crate::spectrum::ApproxValue;

use super::{intersection, BoundaryPoint, Intersection, Line, Vertex};

/// Distance by climbing to the common ancestor.
pub fn walk_distance(a: &Vertex, b: &Vertex) -> i64 {
    let (mut a, mut b) = (a.clone(), b.clone());
    let mut steps = 0;
    while a.level() > b.level() {
        a = a.parent();
        steps += 1;
    }
    while b.level() > a.level() {
        b = b.parent();
        steps += 1;
    }
    while a != b {
        a = a.parent();
        b = b.parent();
        steps += 2;
    }
    steps
}

/// `c(x, β)` from how `]∞, x[` meets `]β^σ, β[`: `q^d` at distance `d`,
/// `q^{-n}` along `n` common edges heading towards `β`, and `1` otherwise.
pub fn c_by_intersection(x: &Series, beta: &QuadraticIrrational, horizon: i64) -> Result<ApproxValue> {
    let ray = Line::new(BoundaryPoint::Infinity, BoundaryPoint::Finite(x.clone()));
    let line = Line::of_quadratic(beta, horizon)?;
    Ok(match intersection(&ray, &line)? {
        Intersection::Disjoint { distance } => ApproxValue::Pow(distance),
        Intersection::Overlap { length: ExtInt::Fin(n), same_orientation: true } => ApproxValue::Pow(-n),
        Intersection::Overlap { length: ExtInt::Fin(_), same_orientation: false } => ApproxValue::Pow(0),
        Intersection::Overlap { .. } => return Err(Error::Domain("x is an endpoint of the axis".into())),
    })
}

/// `c(x, β)` by walking the vertices of `]∞, x[` and `]β^σ, β[` down to
/// level `horizon - 1`, using only ball membership.
pub fn c_by_vertex_walk(x: &Series, beta: &QuadraticIrrational, horizon: i64) -> Result<ApproxValue> {
    let b = beta.series(horizon)?.truncate(horizon);
    let c = beta.conjugate().series(horizon)?.truncate(horizon);
    let h = horizon.min(x.horizon());
    let lo = x.start().min(b.start()).min(c.start()).min(0) - 1;
    let mut top = lo;
    while Vertex::new(&b, top + 1)?.contains(&c)? {
        top += 1;
        if top + 1 >= h {
            return Err(precision("axis endpoints agree to the horizon"));
        }
    }
    let on_line = |w: &Vertex| -> Result<bool> { Ok(w.level() >= top && (w.contains(&b)? || w.contains(&c)?)) };
    let ray: Vec<Vertex> = (lo..h).map(|n| Vertex::new(x, n)).collect::<Result<_>>()?;
    let mut common = Vec::new();
    for r in &ray {
        if on_line(r)? {
            common.push(r);
        }
    }
    if let Some(deep) = common.last() {
        if deep.level() >= h - 1 {
            return Err(precision("x follows the axis to the horizon"));
        }
        let n = common.len() as i64 - 1;
        let towards_beta = deep.contains(&b)? && !deep.contains(&c)?;
        return Ok(ApproxValue::Pow(if towards_beta { -n } else { 0 }));
    }
    let mut line = Vec::new();
    for n in top..h {
        line.push(Vertex::new(&b, n)?);
        if n > top {
            line.push(Vertex::new(&c, n)?);
        }
    }
    let d = ray.iter().flat_map(|r| line.iter().map(move |w| walk_distance(r, w))).min().unwrap();
    Ok(ApproxValue::Pow(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Field, Poly};
    use crate::btree::c_of;

    #[test]
    fn three_ways_agree_near_golden() {
        let f = Field::prime(3).unwrap();
        let y = Poly::y(f);
        let phi = QuadraticIrrational::new(&Poly::one(f), &y.neg(), &Poly::one(f).neg(), &Series::from_poly(&y)).unwrap();
        let s = phi.series(30).unwrap().truncate(30);
        for (i, shift) in ["Y", "1", "0"].iter().enumerate() {
            let p = parse_poly(f, shift).unwrap();
            let x = s.add(&Series::from_poly(&p).shift(-(i as i64) * 3)).truncate(30);
            let x = if i == 2 { x.add(&Series::monomial(f, 1, 5)) } else { x };
            let a = c_of(&BoundaryPoint::Finite(x.clone()), &phi).unwrap();
            assert_eq!(c_by_intersection(&x, &phi, 30).unwrap(), a);
            assert_eq!(c_by_vertex_walk(&x, &phi, 30).unwrap(), a);
        }
    }

    #[test]
    fn walk_distance_matches_formula() {
        let f = Field::prime(2).unwrap();
        let a = Vertex::new(&Series::monomial(f, 1, 2), 4).unwrap();
        let b = Vertex::new(&Series::monomial(f, 1, 3), 5).unwrap();
        assert_eq!(walk_distance(&a, &b), a.distance(&b));
        assert_eq!(walk_distance(&a, &Vertex::base(f)), 4);
    }
}
