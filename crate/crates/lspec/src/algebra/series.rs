//! Precision-tracked Laurent series in `Y^{-1}`: `x = sum_i x_i Y^{-i}`.
//!
//! A series stores the digits `x_i` for `start <= i < horizon`; every digit
//! with index below `start` is zero. An exact series (a Laurent polynomial)
//! has `horizon == EXACT` and all digits past the stored window are zero.
//! Operations never invent digits: each result carries the horizon implied
//! by its inputs.

use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::field::Field;
use super::poly::Poly;
use super::ratfunc::RatFunc;
use super::ExtInt;
use crate::error::{precision, Error, Result};

/// Horizon of an exactly known series.
pub const EXACT: i64 = i64::MAX;

#[inline]
fn hshift(h: i64, d: i64) -> i64 {
    if h == EXACT {
        EXACT
    } else {
        h + d
    }
}

/// Where the digits of a series come from; used to refine it on demand.
#[derive(Clone, Debug)]
pub enum Source {
    /// Nothing beyond the stored digits is recoverable.
    Opaque,
    Rational(Arc<RatFunc>),
    /// A root of `A x^2 + B x + C`; refinement continues the Newton iteration.
    Algebraic(Arc<[Poly; 3]>),
}

/// Result of comparing two series digit by digit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffVal {
    /// First differing index, i.e. `v(x - y)`.
    At(i64),
    /// No difference below the given horizon.
    AtLeast(i64),
    /// Both exact and equal.
    Equal,
}

#[derive(Clone)]
pub struct Series {
    field: Field,
    start: i64,
    coeffs: Vec<u16>,
    horizon: i64,
    source: Source,
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                let i = self.start + k as i64;
                let coef = self.field.format_elem(c);
                parts.push(match i {
                    0 => coef,
                    _ => format!("{coef}*Y^{}", -i),
                });
            }
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        if self.horizon == EXACT {
            write!(f, "{}", parts.join(" + "))
        } else {
            write!(f, "{} + O(Y^{})", parts.join(" + "), -self.horizon)
        }
    }
}

impl PartialEq for Series {
    /// Same known window, same digits, same horizon.
    fn eq(&self, o: &Self) -> bool {
        self.field == o.field && self.start == o.start && self.horizon == o.horizon && self.coeffs == o.coeffs
    }
}

impl Series {
    /// Builds from digits `x_start, x_{start+1}, ..` known up to `horizon`
    /// (`EXACT` for a Laurent polynomial).
    pub fn from_digits(field: Field, start: i64, digits: Vec<u16>, horizon: i64) -> Series {
        let mut s = Series { field, start, coeffs: digits, horizon, source: Source::Opaque };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        if self.horizon != EXACT {
            let keep = (self.horizon - self.start).max(0) as usize;
            self.coeffs.truncate(keep);
        } else {
            while self.coeffs.last() == Some(&0) {
                self.coeffs.pop();
            }
        }
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            Some(0) => {}
            Some(k) => {
                self.coeffs.drain(..k);
                self.start += k as i64;
            }
            None => {
                self.coeffs.clear();
                self.start = if self.horizon == EXACT { 0 } else { self.horizon.max(self.start) };
            }
        }
        if self.horizon != EXACT && self.start + (self.coeffs.len() as i64) < self.horizon && !self.coeffs.is_empty() {
            let n = (self.horizon - self.start) as usize;
            self.coeffs.resize(n, 0);
        }
    }

    pub fn zero(field: Field) -> Series {
        Series { field, start: 0, coeffs: Vec::new(), horizon: EXACT, source: Source::Opaque }
    }
    pub fn one(field: Field) -> Series {
        Series::monomial(field, 1, 0)
    }
    /// `c * Y^{-i}`.
    pub fn monomial(field: Field, c: u16, i: i64) -> Series {
        Series::from_digits(field, i, vec![c], EXACT)
    }
    /// Zero known only up to `horizon`.
    pub fn zero_to(field: Field, horizon: i64) -> Series {
        Series { field, start: horizon, coeffs: Vec::new(), horizon, source: Source::Opaque }
    }

    pub fn from_poly(p: &Poly) -> Series {
        let f = p.field();
        match p.deg_opt() {
            None => Series::zero(f),
            Some(d) => {
                let digits = (0..=d).map(|j| p.coeff(d - j)).collect();
                Series::from_digits(f, -(d as i64), digits, EXACT)
            }
        }
    }

    /// Laurent expansion of `r`, exact below `horizon` (exact outright when
    /// the denominator is a monomial).
    pub fn from_rational(r: &RatFunc, horizon: i64) -> Series {
        let f = r.field();
        let num = Series::from_poly(r.num());
        let den = r.den();
        let den_mono = den.coeffs().iter().filter(|&&c| c != 0).count() == 1;
        let mut s = if den_mono {
            let k = den.deg() as i64;
            let c = f.inv(den.leading());
            num.mul(&Series::monomial(f, c, k))
        } else {
            let dnum = r.num().deg_opt().unwrap_or(0) as i64;
            let inv = Series::from_poly(den).inv(horizon + dnum + 1).expect("nonzero denominator");
            num.mul(&inv).truncate(horizon)
        };
        s.source = Source::Rational(Arc::new(r.clone()));
        s
    }

    pub fn with_source(mut self, source: Source) -> Series {
        self.source = source;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn horizon(&self) -> i64 {
        self.horizon
    }
    pub fn is_exact(&self) -> bool {
        self.horizon == EXACT
    }
    pub fn source(&self) -> &Source {
        &self.source
    }
    /// Index of the first stored digit (the valuation when nonzero).
    pub fn start(&self) -> i64 {
        self.start
    }
    pub fn digits(&self) -> &[u16] {
        &self.coeffs
    }
    /// Index one past the last stored digit.
    pub fn end(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }
    /// True when no digit is known to be nonzero.
    pub fn is_zero_known(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn is_exact_zero(&self) -> bool {
        self.coeffs.is_empty() && self.horizon == EXACT
    }

    /// Digit `x_i` if known.
    #[inline]
    pub fn digit(&self, i: i64) -> Option<u16> {
        if i >= self.horizon {
            return None;
        }
        if i < self.start {
            return Some(0);
        }
        Some(self.coeffs.get((i - self.start) as usize).copied().unwrap_or(0))
    }
    #[inline]
    fn d(&self, i: i64) -> u16 {
        if i < self.start {
            0
        } else {
            self.coeffs.get((i - self.start) as usize).copied().unwrap_or(0)
        }
    }

    /// Valuation: index of the first nonzero digit, `PosInf` for exact zero.
    pub fn val(&self) -> Result<ExtInt> {
        if !self.coeffs.is_empty() {
            Ok(ExtInt::Fin(self.start))
        } else if self.horizon == EXACT {
            Ok(ExtInt::PosInf)
        } else {
            Err(precision(format!("all digits below {} vanish", self.horizon)))
        }
    }
    /// Finite valuation of a series known to be nonzero.
    pub fn val_fin(&self) -> Result<i64> {
        match self.val()? {
            ExtInt::Fin(v) => Ok(v),
            _ => Err(Error::Domain("valuation of zero".into())),
        }
    }
    /// A lower bound for the valuation.
    pub fn val_lb(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.horizon
        } else {
            self.start
        }
    }

    /// `|x| = q^{-v(x)}` as the exponent `-v(x)`.
    pub fn abs_exp(&self) -> Result<ExtInt> {
        Ok(match self.val()? {
            ExtInt::Fin(v) => ExtInt::Fin(-v),
            _ => ExtInt::NegInf,
        })
    }
    /// Membership in the valuation ring O (`v >= 0`).
    pub fn in_ring(&self) -> Result<bool> {
        Ok(self.val_lb() >= 0 || matches!(self.val()?, ExtInt::Fin(v) if v >= 0))
    }
    /// Membership in the maximal ideal m (`v >= 1`).
    pub fn in_ideal(&self) -> Result<bool> {
        Ok(self.val_lb() >= 1 || matches!(self.val()?, ExtInt::Fin(v) if v >= 1))
    }

    /// Drops every digit with index `>= h`.
    pub fn truncate(&self, h: i64) -> Series {
        if h >= self.horizon {
            return self.clone();
        }
        let mut s = Series {
            field: self.field,
            start: self.start.min(h),
            coeffs: self.coeffs.clone(),
            horizon: h,
            source: self.source.clone(),
        };
        s.normalize();
        s
    }

    /// Forgets the horizon: the stored digits become an exact Laurent polynomial.
    pub fn as_exact(&self) -> Series {
        Series::from_digits(self.field, self.start, self.coeffs.clone(), EXACT)
    }

    pub fn add(&self, o: &Series) -> Series {
        self.combine(o, false)
    }
    pub fn sub(&self, o: &Series) -> Series {
        self.combine(o, true)
    }
    fn combine(&self, o: &Series, negate: bool) -> Series {
        let f = self.field;
        let h = self.horizon.min(o.horizon);
        let lo = self.start.min(o.start);
        let hi = if h == EXACT { self.end().max(o.end()) } else { h };
        let lo = lo.min(hi);
        let digits = (lo..hi)
            .map(|i| {
                let b = o.d(i);
                f.add(self.d(i), if negate { f.neg(b) } else { b })
            })
            .collect();
        Series::from_digits(f, lo, digits, h)
    }
    pub fn neg(&self) -> Series {
        let f = self.field;
        Series {
            field: f,
            start: self.start,
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
            horizon: self.horizon,
            source: Source::Opaque,
        }
    }
    pub fn scale(&self, c: u16) -> Series {
        let f = self.field;
        if c == 0 {
            return Series::zero(f);
        }
        Series {
            field: f,
            start: self.start,
            coeffs: self.coeffs.iter().map(|&x| f.mul(x, c)).collect(),
            horizon: self.horizon,
            source: Source::Opaque,
        }
    }
    /// Multiplication by `Y^{-k}`.
    pub fn shift(&self, k: i64) -> Series {
        Series {
            field: self.field,
            start: self.start + k,
            coeffs: self.coeffs.clone(),
            horizon: hshift(self.horizon, k),
            source: Source::Opaque,
        }
    }

    /// Product; the horizon is `min(h_x + v(y), h_y + v(x))`.
    pub fn mul(&self, o: &Series) -> Series {
        let f = self.field;
        if self.is_exact_zero() || o.is_exact_zero() {
            return Series::zero(f);
        }
        let h = hshift(self.horizon, o.val_lb()).min(hshift(o.horizon, self.val_lb()));
        let lo = self.start + o.start;
        let hi = if h == EXACT { self.end() + o.end() - 1 } else { h };
        if hi <= lo {
            return Series::zero_to(f, h);
        }
        let n = (hi - lo) as usize;
        let mut out = vec![0u16; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 || i >= n {
                continue;
            }
            let lim = (n - i).min(o.coeffs.len());
            for (j, &b) in o.coeffs[..lim].iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Series::from_digits(f, lo, out, h)
    }

    /// Inverse, computed at most up to `cap` (always at least the leading digit).
    pub fn inv(&self, cap: i64) -> Result<Series> {
        let f = self.field;
        if self.coeffs.is_empty() {
            return Err(if self.horizon == EXACT {
                Error::Domain("inverse of zero".into())
            } else {
                precision(format!("cannot invert: digits below {} vanish", self.horizon))
            });
        }
        let v = self.start;
        if self.horizon == EXACT && self.coeffs.len() == 1 {
            return Ok(Series::monomial(f, f.inv(self.coeffs[0]), -v));
        }
        let natural = hshift(self.horizon, -2 * v);
        let h = natural.min(cap).max(-v + 1);
        let n = (h + v) as usize;
        let u = &self.coeffs;
        let u0i = f.inv(u[0]);
        let mut w = vec![0u16; n];
        w[0] = u0i;
        for k in 1..n {
            let mut s = 0u16;
            let lim = k.min(u.len() - 1);
            for j in 1..=lim {
                let uj = u[j];
                if uj != 0 {
                    s = f.add(s, f.mul(uj, w[k - j]));
                }
            }
            w[k] = f.neg(f.mul(s, u0i));
        }
        Ok(Series::from_digits(f, -v, w, h))
    }

    /// Quotient `self / o`, computed at most up to `cap`.
    pub fn div(&self, o: &Series, cap: i64) -> Result<Series> {
        if self.is_exact_zero() {
            return Ok(Series::zero(self.field));
        }
        let inv = o.inv(cap.saturating_sub(self.val_lb()))?;
        Ok(self.mul(&inv).truncate(cap))
    }

    /// `(a x + b) / (c x + d)`; `None` stands for the point at infinity.
    pub fn mobius(&self, a: &Poly, b: &Poly, c: &Poly, d: &Poly, cap: i64) -> Result<Option<Series>> {
        let num = Series::from_poly(a).mul(self).add(&Series::from_poly(b));
        let den = Series::from_poly(c).mul(self).add(&Series::from_poly(d));
        if den.is_exact_zero() {
            return Ok(None);
        }
        if den.is_zero_known() {
            return Err(precision("denominator of a homography vanishes to the known precision"));
        }
        Ok(Some(num.div(&den, cap)?))
    }

    /// `([x], {x})` with `[x]` a polynomial and `v({x}) >= 1`.
    pub fn integral_fractional_split(&self) -> Result<(Poly, Series)> {
        if self.horizon < 1 {
            return Err(precision(format!("integral part needs digits up to index 0, known below {}", self.horizon)));
        }
        let f = self.field;
        let mut poly = Vec::new();
        if self.start <= 0 {
            let top = -self.start;
            poly = vec![0u16; top as usize + 1];
            for i in self.start..=0 {
                poly[(-i) as usize] = self.d(i);
            }
        }
        let frac_digits = (1..self.end().max(1)).map(|i| self.d(i)).collect();
        let frac = Series::from_digits(f, 1, frac_digits, self.horizon);
        Ok((Poly::from_coeffs(f, poly), frac))
    }

    /// `v(self - o)` without allocating.
    pub fn val_diff(&self, o: &Series) -> DiffVal {
        let h = self.horizon.min(o.horizon);
        let lo = self.start.min(o.start);
        let hi = if h == EXACT { self.end().max(o.end()) } else { h };
        let mut i = lo;
        while i < hi {
            if self.d(i) != o.d(i) {
                return DiffVal::At(i);
            }
            i += 1;
        }
        if h == EXACT {
            DiffVal::Equal
        } else {
            DiffVal::AtLeast(h)
        }
    }

    /// Recomputes the series from its source up to at least `horizon`.
    pub fn refine(&self, horizon: i64) -> Result<Series> {
        if horizon <= self.horizon {
            return Ok(self.clone());
        }
        match &self.source {
            Source::Rational(r) => Ok(Series::from_rational(r, horizon)),
            Source::Algebraic(t) => {
                let [a, b, c] = &**t;
                super::quadratic::refine_quadratic_root((a, b, c), self, horizon)
            }
            Source::Opaque => Err(precision(format!(
                "opaque series known below {} cannot be refined to {horizon}",
                self.horizon
            ))),
        }
    }

    /// The Laurent polynomial `sum x_i Y^{-i}` over `i < h` as a rational function.
    pub fn to_rational(&self) -> RatFunc {
        let f = self.field;
        let ex = self.as_exact();
        if ex.coeffs.is_empty() {
            return RatFunc::zero(f);
        }
        let lo = ex.start;
        let hi = ex.end() - 1;
        // x = sum_{i=lo}^{hi} x_i Y^{-i} = (sum x_i Y^{hi-i}) / Y^{hi} when hi > 0
        let shift = hi.max(0);
        let mut num = vec![0u16; (shift - lo) as usize + 1];
        for i in lo..=hi {
            num[(shift - i) as usize] = ex.d(i);
        }
        RatFunc::new(Poly::from_coeffs(f, num), Poly::monomial(f, 1, shift as usize)).unwrap()
    }

    pub fn to_json(&self) -> Value {
        let f = self.field;
        let coeffs: Vec<Value> = self
            .coeffs
            .iter()
            .map(|&c| if f.e() == 1 { json!(c) } else { json!(f.format_elem(c)) })
            .collect();
        let mut obj = json!({
            "val": if self.coeffs.is_empty() { Value::Null } else { json!(self.start) },
            "coeffs": coeffs,
            "horizon": if self.horizon == EXACT { json!(self.end()) } else { json!(self.horizon) },
        });
        if self.horizon == EXACT {
            obj["exact"] = json!(true);
        }
        obj
    }

    pub fn from_json(field: Field, v: &Value) -> Result<Series> {
        let bad = |m: &str| Error::Parse(format!("series JSON: {m}"));
        let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(|| bad("missing coeffs"))?;
        let digits = coeffs
            .iter()
            .map(|c| match c {
                Value::Number(n) => n.as_i64().map(|n| field.from_int(n)).ok_or_else(|| bad("coefficient")),
                Value::String(s) => super::text::parse_elem(field, s),
                _ => Err(bad("coefficient")),
            })
            .collect::<Result<Vec<u16>>>()?;
        let horizon = v.get("horizon").and_then(Value::as_i64).ok_or_else(|| bad("missing horizon"))?;
        let start = match v.get("val") {
            Some(Value::Null) | None => horizon,
            Some(x) => x.as_i64().ok_or_else(|| bad("val"))?,
        };
        let exact = v.get("exact").and_then(Value::as_bool).unwrap_or(false);
        Ok(Series::from_digits(field, start, digits, if exact { EXACT } else { horizon }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }

    #[test]
    fn val_examples() {
        let f = f3();
        let y = Series::from_poly(&Poly::y(f));
        assert_eq!(y.val().unwrap(), ExtInt::Fin(-1));
        assert_eq!(Series::zero(f).val().unwrap(), ExtInt::PosInf);
        let r = RatFunc::new(parse_poly(f, "Y^2+1").unwrap(), Poly::y(f)).unwrap();
        let s = Series::from_rational(&r, 3);
        assert_eq!(s.val().unwrap(), ExtInt::Fin(-1));
        assert_eq!(s.digits(), &[1, 0, 1]);
        assert!(Series::zero_to(f, 5).val().is_err());
    }

    #[test]
    fn geometric_series() {
        let f = f3();
        let r = RatFunc::new(Poly::one(f), parse_poly(f, "Y-1").unwrap()).unwrap();
        let s = Series::from_rational(&r, 5);
        assert_eq!(s.start(), 1);
        assert_eq!(s.digits(), &[1, 1, 1, 1]);
        assert_eq!(s.horizon(), 5);
    }

    #[test]
    fn arithmetic_examples() {
        let f = f3();
        let y = Series::from_poly(&Poly::y(f));
        let inv = y.inv(10).unwrap();
        assert!(inv.is_exact());
        assert_eq!(inv, Series::monomial(f, 1, 1));
        let a = y.add(&inv);
        assert_eq!(a.sub(&y).val().unwrap(), ExtInt::Fin(1));
        let r = RatFunc::new(Poly::one(f), parse_poly(f, "Y-1").unwrap()).unwrap();
        let s = Series::from_rational(&r, 8);
        let prod = s.mul(&Series::from_poly(&parse_poly(f, "Y-1").unwrap()));
        assert_eq!(prod.truncate(7).val_diff(&Series::one(f)), DiffVal::AtLeast(7));
    }

    #[test]
    fn split_example() {
        let f = f3();
        let r = RatFunc::new(parse_poly(f, "Y^3+Y+1").unwrap(), parse_poly(f, "Y^2").unwrap()).unwrap();
        let s = Series::from_rational(&r, 6);
        let (int, frac) = s.integral_fractional_split().unwrap();
        assert_eq!(int, Poly::y(f));
        assert_eq!(frac.val().unwrap(), ExtInt::Fin(1));
        assert_eq!(frac.digits(), &[1, 1]);
    }
}
