//! Vertex stabilizers and reduction of vertices to the modular ray `u_h = B(0, -h)`.

use crate::algebra::{Field, Poly, Series};
use crate::btree::Vertex;

use super::{enumerate_group, GroupElement};

/// `M` and `h` with `x = M . u_h`, found by greedy descent: translate the
/// polynomial part of the center away, then invert.
pub fn reduce_to_ray(x: &Vertex) -> (i64, GroupElement) {
    let f = x.field();
    let mut m = GroupElement::identity(f);
    let mut cur = x.clone();
    loop {
        let n = cur.level();
        let (int, frac) = cur.center().integral_fractional_split().expect("vertex centers are exact");
        if !int.is_zero() {
            // x = T(int) . B(frac, n)
            m = m.mul(&GroupElement::translation(&int));
            cur = Vertex::new(&frac, n).unwrap();
        }
        if n <= 0 {
            return (-n, m);
        }
        let inv = GroupElement::inversion(f);
        m = m.mul(&inv);
        cur = inv.apply_vertex(&cur);
    }
}

/// `|Stab(u_h)|`: `q^3 - q` at the base point, `(q - 1) q^{h+1}` above it.
pub fn ray_stabilizer_order(q: u64, h: i64) -> u64 {
    if h == 0 {
        q * q * q - q
    } else {
        (q - 1) * q.pow(h as u32 + 1)
    }
}

/// The elements of `Stab(u_h)`: PGL2(F_q) for `h = 0`, otherwise the maps
/// `y -> (y + b)/d` with `d` a unit and `deg b <= h`.
pub fn ray_stabilizer(field: Field, h: i64) -> Vec<GroupElement> {
    if h == 0 {
        return enumerate_group(field, 0);
    }
    let mut out = Vec::new();
    for b in Poly::all_up_to_degree(field, h as usize) {
        for d in field.units() {
            out.push(GroupElement::new(Poly::one(field), b.clone(), Poly::zero(field), Poly::constant(field, d)).unwrap());
        }
    }
    out
}

/// Stabilizer order of `x` by reduction to the ray.
pub fn stabilizer_order(x: &Vertex) -> u64 {
    let (h, _) = reduce_to_ray(x);
    ray_stabilizer_order(x.field().q() as u64, h)
}

/// Result of counting a stabilizer by enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizerCount {
    pub order: u64,
    /// True when `degree_bound` provably reaches every stabilizing element.
    pub complete: bool,
}

/// Counts `g` with entry degrees `<= degree_bound` fixing `x`.
///
/// Completeness is certified for vertices on the ray, where the stabilizer of
/// `u_h` has entries of degree at most `h`.
pub fn vertex_stabilizer_order(x: &Vertex, degree_bound: usize) -> StabilizerCount {
    let f = x.field();
    let order = enumerate_group(f, degree_bound).iter().filter(|g| g.apply_vertex(x) == *x).count() as u64;
    let on_ray = x.center().is_exact_zero() && x.level() <= 0;
    StabilizerCount { order, complete: on_ray && degree_bound as i64 >= -x.level() }
}

/// `u_h` as a vertex.
pub fn ray_vertex(field: Field, h: i64) -> Vertex {
    Vertex::new(&Series::zero(field), -h).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_point_stabilizer() {
        let f = Field::prime(3).unwrap();
        let c = vertex_stabilizer_order(&Vertex::base(f), 1);
        assert_eq!(c, StabilizerCount { order: 24, complete: true });
        assert_eq!(stabilizer_order(&Vertex::base(f)), 24);
    }

    #[test]
    fn ray_groups() {
        for q in [2u32, 3] {
            let f = Field::with_order(q).unwrap();
            for n in 0..2i64 {
                let v = ray_vertex(f, n + 1);
                let want = (q as u64 - 1) * (q as u64).pow(n as u32 + 2);
                assert_eq!(vertex_stabilizer_order(&v, (n + 1) as usize).order, want);
                assert_eq!(ray_stabilizer(f, n + 1).len() as u64, want);
                assert!(ray_stabilizer(f, n + 1).iter().all(|g| g.apply_vertex(&v) == v));
            }
        }
    }

    #[test]
    fn reduction_reaches_the_ray() {
        let f = Field::prime(3).unwrap();
        let c = Series::from_digits(f, -1, vec![1, 2, 0, 1, 1], crate::algebra::EXACT);
        for n in -3..6 {
            let x = Vertex::new(&c, n).unwrap();
            let (h, m) = reduce_to_ray(&x);
            assert_eq!(m.apply_vertex(&ray_vertex(f, h)), x);
        }
    }
}
