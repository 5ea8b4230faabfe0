//! Rational functions in F_q(Y), kept in lowest terms with monic denominator.

use std::fmt;

use super::field::Field;
use super::poly::Poly;
use super::ExtInt;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.deg() == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<RatFunc> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        let g = num.gcd(&den);
        let (num, den) = if num.is_zero() {
            (num, Poly::one(den.field()))
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let il = den.field().inv(den.leading());
        Ok(RatFunc { num: num.scale(il), den: den.scale(il) })
    }
    pub fn from_poly(p: Poly) -> RatFunc {
        let f = p.field();
        RatFunc { num: p, den: Poly::one(f) }
    }
    pub fn zero(field: Field) -> RatFunc {
        RatFunc::from_poly(Poly::zero(field))
    }
    pub fn num(&self) -> &Poly {
        &self.num
    }
    pub fn den(&self) -> &Poly {
        &self.den
    }
    pub fn field(&self) -> Field {
        self.num.field()
    }
    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    /// `v(P/Q) = deg Q - deg P`.
    pub fn val(&self) -> ExtInt {
        match self.num.deg_opt() {
            None => ExtInt::PosInf,
            Some(d) => ExtInt::Fin(self.den.deg() as i64 - d as i64),
        }
    }
    pub fn add(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).unwrap()
    }
    pub fn sub(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den)).unwrap()
    }
    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }
    pub fn mul(&self, o: &RatFunc) -> RatFunc {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }
    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }
    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        Ok(self.mul(&o.inv()?))
    }
    /// Integral part (polynomial quotient) and fractional part.
    pub fn split(&self) -> (Poly, RatFunc) {
        let (q, r) = self.num.div_rem(&self.den);
        (q, RatFunc::new(r, self.den.clone()).unwrap())
    }
}
