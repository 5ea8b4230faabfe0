//! The Artin map and continued-fraction expansion of rationals, series and
//! quadratic irrationals.

use std::collections::HashMap;

use crate::algebra::{normalize_triple, Poly, QuadraticIrrational, RatFunc, Series, EXACT};
use crate::error::{Error, Result};

use super::word::CfWord;

/// `Psi(f) = {1/f}` for `f` in the maximal ideal.
pub fn artin_map(f: &Series) -> Result<Series> {
    if f.is_exact_zero() {
        return Err(Error::Domain("Artin map of zero".into()));
    }
    let v = f.val_fin()?;
    if v <= 0 {
        return Err(Error::Domain(format!("Artin map needs v(f) >= 1, got {v}")));
    }
    let (_, frac) = f.inv(EXACT)?.integral_fractional_split()?;
    Ok(frac)
}

/// Finite expansion of a rational function by Euclid's algorithm.
pub fn cf_expand_rational(f: &RatFunc) -> CfWord {
    let (mut num, mut den) = (f.num().clone(), f.den().clone());
    let mut coeffs = Vec::new();
    while !den.is_zero() {
        let (a, r) = num.div_rem(&den);
        coeffs.push(a);
        num = std::mem::replace(&mut den, r);
    }
    let a0 = coeffs.remove(0);
    CfWord::finite(a0, coeffs).expect("Euclid quotients past the first are nonconstant")
}

/// Coefficients of a series computable from its known digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesExpansion {
    pub coeffs: Vec<Poly>,
    /// True when the series is exact and rational, so the list is complete.
    pub terminated: bool,
}

/// Expands `x` for at most `max` coefficients, stopping when precision runs out.
pub fn cf_expand_series(x: &Series, max: usize) -> SeriesExpansion {
    let mut coeffs = Vec::new();
    let mut cur = x.clone();
    while coeffs.len() < max {
        let Ok((a, frac)) = cur.integral_fractional_split() else { break };
        coeffs.push(a);
        if frac.is_exact_zero() {
            return SeriesExpansion { coeffs, terminated: true };
        }
        match frac.inv(EXACT) {
            Ok(next) => cur = next,
            Err(_) => break,
        }
    }
    SeriesExpansion { coeffs, terminated: false }
}

/// Triple of `1/(x - a)` for `x` a root of `(A, B, C)`: shift then swap the
/// outer coefficients. Not normalized.
pub fn shift_reciprocal(t: (&Poly, &Poly, &Poly), a: &Poly) -> (Poly, Poly, Poly) {
    let (aa, bb, cc) = t;
    let two = aa.field().from_int(2);
    let ab = aa.mul(a);
    let nb = ab.scale(two).add(bb);
    let nc = ab.mul(a).add(&bb.mul(a)).add(cc);
    (nc, nb, aa.clone())
}

/// `[alpha]` in the reduced regime: the polynomial part of `-B/A`.
fn reduced_quotient(a: &Poly, b: &Poly) -> Poly {
    b.neg().div_rem(a).0
}

/// Exact eventually periodic expansion of a quadratic irrational.
pub fn cf_expand_quadratic(alpha: &QuadraticIrrational, max_steps: usize) -> Result<CfWord> {
    let mut coeffs: Vec<Poly> = Vec::new();
    let mut cur = alpha.clone();
    // pre-reduced phase: coefficients read off refined series
    let mut state = loop {
        if coeffs.len() >= max_steps {
            return Err(Error::BudgetExceeded { steps: coeffs.len(), partial: coeffs });
        }
        let (a, b, c) = cur.triple();
        let s = cur.series(1.max(cur.split() + 1))?;
        let (an, _) = s.integral_fractional_split()?;
        if an.deg_opt().unwrap_or(0) >= 1 && an == reduced_quotient(&a, &b) {
            break (a, b, c);
        }
        let (na, _, _) = shift_reciprocal((&a, &b, &c), &an);
        if na.is_zero() {
            return Err(Error::NotQuadratic);
        }
        let f = a.field();
        cur = cur.mobius(&Poly::zero(f), &Poly::one(f), &Poly::one(f), &an.neg())?;
        coeffs.push(an);
    };
    // reduced phase: the normalized triple is the whole state
    let mut seen: HashMap<(Poly, Poly, Poly), usize> = HashMap::new();
    let start = loop {
        if let Some(&j) = seen.get(&state) {
            break j;
        }
        if coeffs.len() >= max_steps {
            return Err(Error::BudgetExceeded { steps: coeffs.len(), partial: coeffs });
        }
        seen.insert(state.clone(), coeffs.len());
        let an = reduced_quotient(&state.0, &state.1);
        let (na, nb, nc) = shift_reciprocal((&state.0, &state.1, &state.2), &an);
        if na.is_zero() {
            return Err(Error::NotQuadratic);
        }
        state = normalize_triple(&na, &nb, &nc);
        coeffs.push(an);
    };
    word_from_sequence(&coeffs, start)
}

/// Word of the sequence `coeffs[..]` continued periodically from `start`.
fn word_from_sequence(coeffs: &[Poly], start: usize) -> Result<CfWord> {
    let k = coeffs.len() - start;
    let at = |i: usize| -> Poly {
        if i < coeffs.len() {
            coeffs[i].clone()
        } else {
            coeffs[start + (i - start) % k].clone()
        }
    };
    let j = start.max(1);
    let pre = (1..j).map(at).collect();
    let cycle = (j..j + k).map(at).collect();
    CfWord::new(coeffs[0].clone(), pre, cycle)
}

/// Triple of `[per: cycle]` from the period product `[A B; C D]`:
/// `C x^2 + (D - A) x - B`, normalized.
pub fn cycle_triple(cycle: &[Poly]) -> (Poly, Poly, Poly) {
    let f = cycle[0].field();
    let (mut a, mut b, mut c, mut d) = (Poly::one(f), Poly::zero(f), Poly::zero(f), Poly::one(f));
    for t in cycle {
        // [a b; c d] * [t 1; 1 0]
        let (na, nc) = (a.mul(t).add(&b), c.mul(t).add(&d));
        b = a;
        d = c;
        a = na;
        c = nc;
    }
    normalize_triple(&c, &d.sub(&a), &b.neg())
}

/// `alpha_j = [per: c_j, c_{j+1}, ..]` for every rotation, each exact below at
/// least `horizon`, by the backward recursion `alpha_j = c_j + 1/alpha_{j+1}`.
pub fn rotation_series(cycle: &[Poly], horizon: i64) -> Vec<Series> {
    let k = cycle.len();
    let c0 = &cycle[0];
    let d0 = c0.deg();
    let mut x = Series::from_digits(c0.field(), -(d0 as i64), (0..=d0).map(|i| c0.coeff(d0 - i)).collect(), 1);
    let mut out: Vec<Option<Series>> = vec![None; k];
    loop {
        for j in (0..k).rev() {
            let inv = x.inv(horizon + 1).expect("periodic coefficients are nonconstant");
            x = Series::from_poly(&cycle[j]).add(&inv).truncate(horizon.max(1) + 1);
            out[j] = Some(x.clone());
        }
        if out.iter().all(|s| s.as_ref().unwrap().horizon() >= horizon) {
            break;
        }
    }
    out.into_iter().map(Option::unwrap).collect()
}

/// The purely periodic quadratic `[per: cycle]`.
pub fn cycle_quadratic(cycle: &[Poly]) -> QuadraticIrrational {
    let (a, b, c) = cycle_triple(cycle);
    let split = -(cycle[0].deg() as i64);
    let s = rotation_series(cycle, split + 4).swap_remove(0);
    QuadraticIrrational::from_parts(a, b, c, split, s)
}

/// The quadratic irrational whose expansion is `w`.
pub fn periodic_word_to_quadratic(w: &CfWord) -> Result<QuadraticIrrational> {
    if w.is_finite() {
        return Err(Error::Domain("word has no period".into()));
    }
    let beta = cycle_quadratic(w.tail_cycle());
    let f = w.field();
    let (mut a, mut b, mut c, mut d) = (Poly::one(f), Poly::zero(f), Poly::zero(f), Poly::one(f));
    for t in std::iter::once(w.a0()).chain(w.preperiod().iter()) {
        let (na, nc) = (a.mul(t).add(&b), c.mul(t).add(&d));
        b = a;
        d = c;
        a = na;
        c = nc;
    }
    beta.mobius(&a, &b, &c, &d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, ExtInt, Field};

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }
    fn p(s: &str) -> Poly {
        parse_poly(f3(), s).unwrap()
    }

    #[test]
    fn artin_examples() {
        let f = f3();
        assert!(artin_map(&Series::monomial(f, 1, 1)).unwrap().is_exact_zero());
        let x = Series::from_digits(f, 1, vec![1, 1], 10);
        let r = artin_map(&x).unwrap();
        // Y/(1+Y^{-1}) = Y - 1 + Y^{-1} - Y^{-2} + ..
        assert_eq!(r.digit(1), Some(1));
        assert_eq!(r.digit(2), Some(2));
        assert!(artin_map(&Series::monomial(f, 1, 0)).is_err());
    }

    #[test]
    fn rational_examples() {
        let r = RatFunc::new(p("Y^2+1"), p("Y")).unwrap();
        let w = cf_expand_rational(&r);
        assert_eq!(w.to_string(), "[Y; Y]");
        assert_eq!(w.evaluate().unwrap(), r);
        assert_eq!(cf_expand_rational(&RatFunc::from_poly(p("Y^3"))).to_string(), "[Y^3]");
    }

    #[test]
    fn golden_expansion() {
        let f = f3();
        let phi = QuadraticIrrational::new(&Poly::one(f), &p("2*Y"), &p("2"), &Series::from_poly(&p("Y"))).unwrap();
        let w = cf_expand_quadratic(&phi, 100).unwrap();
        assert_eq!(w.to_string(), "[per: Y]");
        let back = periodic_word_to_quadratic(&w).unwrap();
        assert!(back.same_root(&phi));
    }

    #[test]
    fn round_trip_preperiodic() {
        let f = f3();
        let w = CfWord::parse(f, "[0; per: Y^2, Y]").unwrap();
        let q = periodic_word_to_quadratic(&w).unwrap();
        assert_eq!(cf_expand_quadratic(&q, 100).unwrap(), w);
        let w = CfWord::parse(f, "[Y+1; Y^2, 2*Y, per: Y^3+Y, Y, 2*Y^2]").unwrap();
        let q = periodic_word_to_quadratic(&w).unwrap();
        assert_eq!(cf_expand_quadratic(&q, 100).unwrap(), w);
    }

    #[test]
    fn sqrt_expansion_round_trip() {
        let f = f3();
        // x^2 - (Y^2 + 1)
        let a = QuadraticIrrational::new(&Poly::one(f), &Poly::zero(f), &p("2*Y^2+2"), &Series::from_poly(&p("Y"))).unwrap();
        let w = cf_expand_quadratic(&a, 100).unwrap();
        assert!(!w.is_finite());
        let back = periodic_word_to_quadratic(&w).unwrap();
        assert!(back.same_root(&a));
    }

    #[test]
    fn conjugates_of_rotations_reverse_the_period() {
        let cyc = vec![p("Y^2"), p("Y"), p("Y+1")];
        let rots = rotation_series(&cyc, 20);
        let rev: Vec<Poly> = cyc.iter().rev().cloned().collect();
        let rrots = rotation_series(&rev, 20);
        for j in 0..3 {
            let q = cycle_quadratic(&[cyc[j].clone(), cyc[(j + 1) % 3].clone(), cyc[(j + 2) % 3].clone()]);
            assert_eq!(rots[j].truncate(15).val_diff(&q.series(15).unwrap().truncate(15)), crate::algebra::DiffVal::AtLeast(15));
            // -1/conj(alpha_j) = [per: c_{j-1}, c_{j-2}, ..]
            let conj = q.conjugate().series(20).unwrap();
            let i = (3 - j) % 3;
            let minus_inv = rrots[i].inv(30).unwrap().neg();
            assert_eq!(conj.truncate(15).val_diff(&minus_inv.truncate(15)), crate::algebra::DiffVal::AtLeast(15));
            assert!(conj.val().unwrap() >= ExtInt::Fin(1));
        }
    }
}
