use proptest::prelude::*;

use lspec::algebra::{ExtInt, Field, Poly, QuadraticIrrational, RatFunc, Series};
use lspec::btree::{c_of, oracle, BoundaryPoint, Vertex};
use lspec::contfrac::{cf_expand_quadratic, cf_expand_rational, cycle_class_key, periodic_word_to_quadratic, CfWord};
use lspec::modgroup::{enumerate_group, stabilizer_order, GroupElement};
use lspec::spectrum::{c_alpha_quadratic, SearchBudget};

fn field(q: u32) -> Field {
    Field::with_order(q).unwrap()
}

fn poly(f: Field, c: &[u16]) -> Poly {
    let q = f.q() as u16;
    Poly::from_coeffs(f, c.iter().map(|x| x % q).collect())
}

/// Nonconstant polynomial from raw coefficients.
fn coeff(f: Field, c: &[u16]) -> Poly {
    let p = poly(f, c);
    if p.deg_opt().unwrap_or(0) == 0 {
        p.add(&Poly::y(f))
    } else {
        p
    }
}

fn orders() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 4, 5, 8, 9])
}

fn raw() -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..16, 0..5)
}

fn word(f: Field, a0: &[u16], pre: &[Vec<u16>], per: &[Vec<u16>]) -> CfWord {
    CfWord::new(poly(f, a0), pre.iter().map(|c| coeff(f, c)).collect(), per.iter().map(|c| coeff(f, c)).collect()).unwrap()
}

fn element(f: Field, i: usize) -> GroupElement {
    let g = enumerate_group(f, 1);
    g[i % g.len()].clone()
}

fn quadratic(f: Field, per: &[Vec<u16>]) -> QuadraticIrrational {
    periodic_word_to_quadratic(&word(f, &[], &[], per)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(q in orders(), a in 0u16..9, b in 0u16..9, c in 0u16..9) {
        let f = field(q);
        let (a, b, c) = (a % q as u16, b % q as u16, c % q as u16);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn division_with_remainder(q in orders(), a in raw(), d in raw()) {
        let f = field(q);
        let (a, d) = (poly(f, &a), poly(f, &d));
        prop_assume!(!d.is_zero());
        let (quo, rem) = a.div_rem(&d);
        prop_assert_eq!(quo.mul(&d).add(&rem), a.clone());
        prop_assert!(rem.is_zero() || rem.deg() < d.deg());
        let (g, s, t) = a.ext_gcd(&d);
        prop_assert_eq!(s.mul(&a).add(&t.mul(&d)), g.clone());
        prop_assert!(a.rem(&g).is_zero() && d.rem(&g).is_zero());
    }

    #[test]
    fn series_inverse(q in orders(), n in raw(), d in raw()) {
        let f = field(q);
        let (n, d) = (poly(f, &n), poly(f, &d));
        prop_assume!(!d.is_zero() && !n.is_zero());
        let r = RatFunc::new(n, d).unwrap();
        let s = Series::from_rational(&r, 30);
        let prod = s.mul(&s.inv(30).unwrap());
        prop_assert_eq!(prod.sub(&Series::one(f)).val_lb() >= 30 - 2 * s.val_fin().unwrap().abs(), true);
    }

    #[test]
    fn rational_round_trip(q in orders(), n in raw(), d in raw()) {
        let f = field(q);
        let d = poly(f, &d);
        prop_assume!(!d.is_zero());
        let r = RatFunc::new(poly(f, &n), d).unwrap();
        prop_assert_eq!(cf_expand_rational(&r).evaluate().unwrap(), r);
    }

    #[test]
    fn periodic_round_trip(q in prop::sample::select(vec![2u32, 3, 4]), a0 in raw(),
                           pre in prop::collection::vec(raw(), 0..3), per in prop::collection::vec(raw(), 1..4)) {
        let f = field(q);
        let w = word(f, &a0, &pre, &per);
        let alpha = periodic_word_to_quadratic(&w).unwrap();
        prop_assert_eq!(cf_expand_quadratic(&alpha, 10_000).unwrap(), w);
    }

    #[test]
    fn convergent_determinant(q in orders(), per in prop::collection::vec(raw(), 1..4)) {
        let f = field(q);
        let w = word(f, &[1], &[], &per);
        let cs = w.convergents(10).unwrap();
        for i in 1..cs.len() {
            let det = cs[i].p.mul(&cs[i - 1].q).sub(&cs[i - 1].p.mul(&cs[i].q));
            prop_assert_eq!(det.deg_opt(), Some(0));
        }
    }

    #[test]
    fn group_action_composes(q in prop::sample::select(vec![2u32, 3]), i in 0usize..10_000, j in 0usize..10_000,
                             per in prop::collection::vec(raw(), 1..3)) {
        let f = field(q);
        let (g, h) = (element(f, i), element(f, j));
        let alpha = quadratic(f, &per);
        let lhs = g.mul(&h).apply_quadratic(&alpha).unwrap();
        let rhs = g.apply_quadratic(&h.apply_quadratic(&alpha).unwrap()).unwrap();
        prop_assert!(lhs.same_root(&rhs));
        // conjugation commutes with the action
        let c1 = g.apply_quadratic(&alpha.conjugate()).unwrap();
        prop_assert!(c1.same_root(&g.apply_quadratic(&alpha).unwrap().conjugate()));
        prop_assert!(g.mul(&g.inverse()).is_identity());
        let v = Vertex::new(&Series::from_poly(&poly(f, &per[0])), -(i as i64 % 3)).unwrap();
        let w = v.children()[j % q as usize].clone();
        prop_assert_eq!(g.mul(&h).apply_vertex(&v), g.apply_vertex(&h.apply_vertex(&v)));
        prop_assert_eq!(g.apply_vertex(&v).distance(&g.apply_vertex(&w)), 1);
        prop_assert_eq!(stabilizer_order(&g.apply_vertex(&v)), stabilizer_order(&v));
    }

    #[test]
    fn cycle_key_is_rotation_invariant(q in orders(), per in prop::collection::vec(raw(), 1..5), k in 0usize..5) {
        let f = field(q);
        let cyc: Vec<Poly> = per.iter().map(|c| coeff(f, c)).collect();
        let k = k % cyc.len();
        let rotated: Vec<Poly> = cyc[k..].iter().chain(cyc[..k].iter()).cloned().collect();
        prop_assert_eq!(cycle_class_key(&cyc), cycle_class_key(&rotated));
    }

    #[test]
    fn oracles_agree(q in prop::sample::select(vec![2u32, 3, 4]), per in prop::collection::vec(raw(), 1..3),
                     digits in prop::collection::vec(0u16..16, 30), start in -3i64..3) {
        let f = field(q);
        let beta = quadratic(f, &per);
        let x = Series::from_digits(f, start, digits.iter().map(|d| d % q as u16).collect(), start + 30);
        let a = c_of(&BoundaryPoint::Finite(x.clone()), &beta).unwrap();
        prop_assert_eq!(a, oracle::c_by_intersection(&x, &beta, 80).unwrap());
        prop_assert_eq!(a, oracle::c_by_vertex_walk(&x, &beta, 80).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn approximation_constant_is_symmetric(a in prop::collection::vec(raw(), 1..3), b in prop::collection::vec(raw(), 1..3)) {
        let f = field(3);
        let (x, y) = (quadratic(f, &a), quadratic(f, &b));
        let budget = SearchBudget::default();
        match (c_alpha_quadratic(&x, &y, &budget), c_alpha_quadratic(&y, &x, &budget)) {
            (Ok((u, _)), Ok((v, _))) => prop_assert_eq!(u, v),
            (Err(_), Err(_)) => {}
            (l, r) => prop_assert!(false, "{:?} vs {:?}", l.map(|v| v.0), r.map(|v| v.0)),
        }
    }

    #[test]
    fn exact_values_do_not_depend_on_enumeration_bound(a in prop::collection::vec(raw(), 1..3), b in prop::collection::vec(raw(), 1..3)) {
        let f = field(2);
        let (x, y) = (quadratic(f, &a), quadratic(f, &b));
        let small = SearchBudget { degree_bound: 0, ..SearchBudget::default() };
        let large = SearchBudget { degree_bound: 2, ..SearchBudget::default() };
        if let (Ok((u, _)), Ok((v, _))) = (c_alpha_quadratic(&x, &y, &small), c_alpha_quadratic(&x, &y, &large)) {
            prop_assert_eq!(u, v);
        }
    }
}

#[test]
fn approximation_identity_on_quadratics() {
    let f = field(3);
    let w = CfWord::parse(f, "[Y; Y+1, per: Y^2, 2*Y]").unwrap();
    let alpha = periodic_word_to_quadratic(&w).unwrap();
    let s = alpha.series(200).unwrap();
    let cs = w.convergents(12).unwrap();
    for i in 0..cs.len() - 1 {
        let r = RatFunc::new(cs[i].p.clone(), cs[i].q.clone()).unwrap();
        let v = s.sub(&Series::from_rational(&r, 200)).val().unwrap();
        assert_eq!(v, ExtInt::Fin((cs[i].q.deg() + cs[i + 1].q.deg()) as i64));
    }
}
