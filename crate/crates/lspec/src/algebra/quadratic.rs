//! Quadratic irrationals over F_q(Y) inside F_q((Y^{-1})), and Newton refinement
//! of their roots.

use std::fmt;
use std::sync::{Arc, RwLock};

use serde_json::{json, Value};

use super::field::Field;
use super::poly::Poly;
use super::series::{Series, Source};
use super::ExtInt;
use crate::error::{Error, Result};

/// `A x^2 + B x + C` evaluated at an exact series.
fn eval_exact(a: &Series, b: &Series, c: &Series, x: &Series) -> (Series, Series) {
    let ax = a.mul(x);
    let fx = ax.add(b).mul(x).add(c);
    let dfx = ax.add(&ax).add(b);
    (fx, dfx)
}

/// Number of correct digits of an exact candidate `x` and `s = v(x - other root)`.
/// Returns `None` for `d` when `x` is an exact root.
fn isolation(a: &Series, b: &Series, c: &Series, x: &Series) -> Result<(Option<i64>, i64)> {
    let (fx, dfx) = eval_exact(a, b, c, x);
    let va = a.val_fin()?;
    let vd = match dfx.val()? {
        ExtInt::Fin(v) => v,
        _ => return Err(Error::RootNotIsolated),
    };
    let s = vd - va;
    match fx.val()? {
        ExtInt::PosInf => Ok((None, s)),
        ExtInt::Fin(vf) => {
            if vf <= va + 2 * s {
                Err(Error::RootNotIsolated)
            } else {
                Ok((Some(vf - va - s), s))
            }
        }
        ExtInt::NegInf => unreachable!(),
    }
}

/// Refines `approx` to the root of `A x^2 + B x + C` it isolates, exact below
/// `target` (every Newton step takes `d` correct digits to `2d - s`, where
/// `s = v(alpha - alpha^sigma)`).
pub fn refine_quadratic_root(minpoly: (&Poly, &Poly, &Poly), approx: &Series, target: i64) -> Result<Series> {
    let (a, b, c) = minpoly;
    let source = Source::Algebraic(Arc::new([a.clone(), b.clone(), c.clone()]));
    if a.is_zero() {
        if b.is_zero() {
            return Err(Error::NotQuadratic);
        }
        let r = super::RatFunc::new(c.neg(), b.clone())?;
        return Ok(Series::from_rational(&r, target).with_source(source));
    }
    let (sa, sb, sc) = (Series::from_poly(a), Series::from_poly(b), Series::from_poly(c));
    let mut x = approx.as_exact();
    let mut first = true;
    let mut target = target;
    loop {
        let (d, s) = isolation(&sa, &sb, &sc, &x)?;
        if first {
            // enough digits that the residual itself vanishes below `target`
            target = target.max(target + a.deg() as i64 - s + 1);
        }
        let d = match d {
            None => return Ok(x.with_source(source)),
            Some(d) => d,
        };
        if first && d < approx.horizon().min(target) && !approx.is_exact() {
            // the caller's digits are not all digits of a root
            return Err(Error::NotARoot);
        }
        first = false;
        if d >= target {
            return Ok(x.truncate(target).with_source(source));
        }
        let next = 2 * d - s;
        if next <= d {
            return Err(Error::NotARoot);
        }
        let (fx, dfx) = eval_exact(&sa, &sb, &sc, &x);
        let step = fx.div(&dfx, next)?;
        x = x.sub(&step).truncate(next).as_exact();
    }
}

/// Triple of `g . x` for `x` a root of `(A, B, C)` and `g = [a b; c d]`,
/// normalized.
pub fn mobius_triple(t: (&Poly, &Poly, &Poly), g: (&Poly, &Poly, &Poly, &Poly)) -> (Poly, Poly, Poly) {
    let (aa, bb, cc) = t;
    let (a, b, c, d) = g;
    // x = (d y - b) / (-c y + a)
    let two = aa.field().from_int(2);
    let na = aa.mul(&d.mul(d)).sub(&bb.mul(&d.mul(c))).add(&cc.mul(&c.mul(c)));
    let nb = aa
        .mul(&d.mul(b))
        .scale(two)
        .neg()
        .add(&bb.mul(&d.mul(a).add(&b.mul(c))))
        .sub(&cc.mul(&c.mul(a)).scale(two));
    let nc = aa.mul(&b.mul(b)).sub(&bb.mul(&b.mul(a))).add(&cc.mul(&a.mul(a)));
    normalize_triple(&na, &nb, &nc)
}

struct Cache {
    best: Series,
}

/// A root of an irreducible `A x^2 + B x + C` (content 1, `A` monic) lying in
/// F_q((Y^{-1})), pinned down by a selector series finer than `v(alpha - alpha^sigma)`.
#[derive(Clone)]
pub struct QuadraticIrrational {
    a: Poly,
    b: Poly,
    c: Poly,
    split: i64,
    cache: Arc<RwLock<Cache>>,
}

impl fmt::Debug for QuadraticIrrational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.cache.read().unwrap().best.truncate(self.split + 3);
        write!(f, "root of ({})x^2+({})x+({}) near {:?}", self.a, self.b, self.c, s)
    }
}

/// Scales the triple to content 1 with `A` monic.
pub fn normalize_triple(a: &Poly, b: &Poly, c: &Poly) -> (Poly, Poly, Poly) {
    let g = a.gcd(b).gcd(c);
    let (a, b, c) = if g.is_zero() || g.deg() == 0 {
        (a.clone(), b.clone(), c.clone())
    } else {
        (a.div_rem(&g).0, b.div_rem(&g).0, c.div_rem(&g).0)
    };
    let lead = if !a.is_zero() {
        a.leading()
    } else if !b.is_zero() {
        b.leading()
    } else {
        c.leading()
    };
    let u = a.field().inv(lead);
    (a.scale(u), b.scale(u), c.scale(u))
}

/// `v(alpha - alpha^sigma)` from the triple, or `None` when the roots are not
/// distinct elements of F_q((Y^{-1})) that this formula can see.
fn split_of(a: &Poly, b: &Poly, c: &Poly) -> Option<i64> {
    let f = a.field();
    let da = a.deg() as i64;
    if f.p() == 2 {
        return b.deg_opt().map(|db| da - db as i64);
    }
    let four = f.from_int(4);
    let disc = b.mul(b).sub(&a.mul(c).scale(four));
    let dd = disc.deg_opt()? as i64;
    if dd % 2 == 1 {
        return None;
    }
    Some(da - dd / 2)
}

impl QuadraticIrrational {
    /// Builds the root of `A x^2 + B x + C` isolated by `approx`.
    pub fn new(a: &Poly, b: &Poly, c: &Poly, approx: &Series) -> Result<QuadraticIrrational> {
        let (a, b, c) = normalize_triple(a, b, c);
        if a.is_zero() {
            return Err(Error::NotQuadratic);
        }
        let f = a.field();
        if f.p() != 2 {
            let four = f.from_int(4);
            let disc = b.mul(&b).sub(&a.mul(&c).scale(four));
            if disc.sqrt().is_some() {
                return Err(Error::NotQuadratic);
            }
        } else if b.is_zero() {
            return Err(Error::NotQuadratic);
        }
        let split = split_of(&a, &b, &c).ok_or_else(|| Error::Domain("roots do not lie in F_q((1/Y))".into()))?;
        let best = refine_quadratic_root((&a, &b, &c), approx, split + 2)?;
        let q = QuadraticIrrational::from_parts(a, b, c, split, best);
        if f.p() == 2 && q.has_rational_root()? {
            return Err(Error::NotQuadratic);
        }
        Ok(q)
    }

    /// Trusted constructor: normalized irreducible triple, known split and a
    /// series isolating the root.
    pub(crate) fn from_parts(a: Poly, b: Poly, c: Poly, split: i64, best: Series) -> QuadraticIrrational {
        let best = best.with_source(Source::Algebraic(Arc::new([a.clone(), b.clone(), c.clone()])));
        QuadraticIrrational { a, b, c, split, cache: Arc::new(RwLock::new(Cache { best })) }
    }

    /// `split_of` for callers holding a normalized triple.
    pub fn split_of_triple(a: &Poly, b: &Poly, c: &Poly) -> Option<i64> {
        split_of(a, b, c)
    }

    /// The image `g . self` for `g = [a b; c d]` with unit determinant.
    pub fn mobius(&self, a: &Poly, b: &Poly, c: &Poly, d: &Poly) -> Result<QuadraticIrrational> {
        let (na, nb, nc) = mobius_triple((&self.a, &self.b, &self.c), (a, b, c, d));
        if na.is_zero() {
            return Err(Error::NotQuadratic);
        }
        let split = split_of(&na, &nb, &nc).ok_or(Error::NotQuadratic)?;
        let mut h = self.approx().horizon().max(self.split + 2).max(4);
        loop {
            let x = self.series(h)?;
            let want = split + 2;
            match x.mobius(a, b, c, d, want + 8) {
                Ok(Some(img)) if img.horizon() >= want => {
                    return Ok(QuadraticIrrational::from_parts(na, nb, nc, split, img));
                }
                Ok(_) | Err(Error::InsufficientPrecision(_)) => {}
                Err(e) => return Err(e),
            }
            h = 2 * h + 4;
        }
    }

    /// Char-2 reducibility test: a rational root has denominator dividing `A`,
    /// so it would show up among the convergents of denominator degree `<= deg A`.
    fn has_rational_root(&self) -> Result<bool> {
        let d = self.a.deg() as i64;
        let s = self.series(2 * d + 2 + self.split.max(0))?;
        let r = s.to_rational();
        let (mut num, mut den) = (r.num().clone(), r.den().clone());
        let f = self.field();
        let (mut p0, mut p1) = (Poly::one(f), Poly::zero(f));
        let (mut q0, mut q1) = (Poly::zero(f), Poly::one(f));
        while !den.is_zero() {
            let (a, rem) = num.div_rem(&den);
            let p2 = a.mul(&p0).add(&p1);
            let q2 = a.mul(&q0).add(&q1);
            p1 = std::mem::replace(&mut p0, p2);
            q1 = std::mem::replace(&mut q0, q2);
            if q0.deg() as i64 > d {
                break;
            }
            let val = self.a.mul(&p0).mul(&p0).add(&self.b.mul(&p0).mul(&q0)).add(&self.c.mul(&q0).mul(&q0));
            if val.is_zero() {
                return Ok(true);
            }
            num = std::mem::replace(&mut den, rem);
        }
        Ok(false)
    }

    pub fn field(&self) -> Field {
        self.a.field()
    }
    pub fn a(&self) -> &Poly {
        &self.a
    }
    pub fn b(&self) -> &Poly {
        &self.b
    }
    pub fn c(&self) -> &Poly {
        &self.c
    }
    pub fn triple(&self) -> (Poly, Poly, Poly) {
        (self.a.clone(), self.b.clone(), self.c.clone())
    }
    /// `v(alpha - alpha^sigma)`; the complexity is `q^{split}`.
    pub fn split(&self) -> i64 {
        self.split
    }

    /// The root exact below at least `horizon`.
    pub fn series(&self, horizon: i64) -> Result<Series> {
        {
            let c = self.cache.read().unwrap();
            if c.best.horizon() >= horizon {
                return Ok(c.best.clone());
            }
        }
        let cur = self.cache.read().unwrap().best.clone();
        let target = horizon.max(2 * cur.horizon().min(1 << 40) - self.split);
        let better = refine_quadratic_root((&self.a, &self.b, &self.c), &cur, target)?;
        let mut c = self.cache.write().unwrap();
        if better.horizon() > c.best.horizon() {
            c.best = better.clone();
        }
        Ok(c.best.clone())
    }

    /// The best approximation computed so far.
    pub fn approx(&self) -> Series {
        self.cache.read().unwrap().best.clone()
    }

    /// The other root of the same polynomial.
    pub fn conjugate(&self) -> QuadraticIrrational {
        let h = self.approx().horizon().max(self.split + 2);
        let alpha = self.series(h).expect("refinable");
        let sum = super::RatFunc::new(self.b.neg(), self.a.clone()).unwrap();
        let other = Series::from_rational(&sum, h).sub(&alpha).truncate(h);
        QuadraticIrrational::from_parts(self.a.clone(), self.b.clone(), self.c.clone(), self.split, other)
    }

    /// True when both describe the same element of F_q((Y^{-1})).
    pub fn same_root(&self, o: &QuadraticIrrational) -> bool {
        if self.a != o.a || self.b != o.b || self.c != o.c {
            return false;
        }
        let h = self.split + 1;
        let (x, y) = (self.series(h).unwrap(), o.series(h).unwrap());
        !matches!(x.val_diff(&y), super::DiffVal::At(i) if i < h)
    }

    /// True when `o` is the Galois conjugate of `self`.
    pub fn is_conjugate_of(&self, o: &QuadraticIrrational) -> bool {
        self.a == o.a && self.b == o.b && self.c == o.c && !self.same_root(o)
    }

    /// Deduplication key: triple plus the selector digits below `split + 2`.
    pub fn key(&self) -> (Poly, Poly, Poly, i64, Vec<u16>) {
        let h = self.split + 2;
        let s = self.series(h).unwrap().truncate(h);
        (self.a.clone(), self.b.clone(), self.c.clone(), s.start(), s.digits().to_vec())
    }

    pub fn to_json(&self) -> Value {
        let h = self.split + 2;
        let s = self.series(h).unwrap().truncate(h);
        json!({
            "minpoly": [self.a.to_string(), self.b.to_string(), self.c.to_string()],
            "selector": s.to_json(),
            "split": self.split,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn golden(f: Field) -> (Poly, Poly, Poly) {
        (Poly::one(f), Poly::y(f).neg(), Poly::constant(f, f.from_int(-1)))
    }

    #[test]
    fn newton_golden() {
        let f = Field::prime(3).unwrap();
        let (a, b, c) = golden(f);
        let approx = Series::from_digits(f, -1, vec![1, 0], 1);
        let r = refine_quadratic_root((&a, &b, &c), &approx, 6).unwrap();
        assert!(r.horizon() >= 6);
        // Y + Y^{-1} - Y^{-3} + ...
        assert_eq!(r.digit(-1), Some(1));
        assert_eq!(r.digit(0), Some(0));
        assert_eq!(r.digit(1), Some(1));
        assert_eq!(r.digit(2), Some(0));
        assert_eq!(r.digit(3), Some(2));
        let x = r.as_exact();
        let res = x.mul(&x).sub(&Series::from_poly(&b.neg()).mul(&x)).sub(&Series::one(f));
        assert!(res.val().unwrap() > ExtInt::Fin(6));
    }

    #[test]
    fn newton_conjugate_root() {
        let f = Field::prime(3).unwrap();
        let (a, b, c) = golden(f);
        let approx = Series::from_digits(f, 1, vec![2, 0], 3);
        let r = refine_quadratic_root((&a, &b, &c), &approx, 8).unwrap();
        assert_eq!(r.start(), 1);
        assert_eq!(r.digit(1), Some(2));
    }

    #[test]
    fn exact_rational_root() {
        let f = Field::prime(3).unwrap();
        let y2 = parse_poly(f, "Y^2").unwrap();
        let r = refine_quadratic_root((&Poly::one(f), &y2.neg(), &Poly::zero(f)), &Series::from_poly(&y2), 10).unwrap();
        assert!(r.is_exact());
        assert_eq!(r, Series::from_poly(&y2));
    }

    #[test]
    fn reducible_rejected() {
        let f = Field::prime(3).unwrap();
        let y2 = parse_poly(f, "Y^2").unwrap();
        let e = QuadraticIrrational::new(&Poly::one(f), &y2.neg(), &Poly::zero(f), &Series::from_poly(&y2));
        assert_eq!(e.unwrap_err(), Error::NotQuadratic);
        let f2 = Field::prime(2).unwrap();
        // (x - Y)(x - Y - 1) = x^2 + x + Y^2 + Y over F_2
        let c = parse_poly(f2, "Y^2+Y").unwrap();
        let e = QuadraticIrrational::new(&Poly::one(f2), &Poly::one(f2), &c, &Series::from_poly(&Poly::y(f2)));
        assert_eq!(e.unwrap_err(), Error::NotQuadratic);
    }

    #[test]
    fn conjugate_involution() {
        let f = Field::prime(3).unwrap();
        let (a, b, c) = golden(f);
        let phi = QuadraticIrrational::new(&a, &b, &c, &Series::from_poly(&Poly::y(f))).unwrap();
        assert_eq!(phi.split(), -1);
        let s = phi.conjugate();
        assert_eq!(s.series(4).unwrap().val().unwrap(), ExtInt::Fin(1));
        assert!(s.is_conjugate_of(&phi));
        assert!(s.conjugate().same_root(&phi));
    }
}
