//! Finite fields F_q, q = p^e, with table-driven arithmetic.
//!
//! An element is stored as a `u16` index: the coordinate vector
//! `(c_0, .., c_{e-1})` in the basis `1, t, .., t^{e-1}` is packed as
//! `c_0 + c_1 p + .. + c_{e-1} p^{e-1}`. For prime fields the index is the
//! residue itself. Fields are interned, so [`Field`] is a cheap `Copy` handle.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};

/// Largest supported field order (multiplication tables are `q * q`).
pub const MAX_Q: u32 = 4096;

pub(crate) struct FieldData {
    p: u32,
    e: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

/// Handle to an interned finite field (the `FieldContext` of the data model).
#[derive(Clone, Copy)]
pub struct Field(&'static FieldData);

pub type FieldContext = Field;

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.e == 1 {
            write!(f, "F_{}", self.0.p)
        } else {
            write!(f, "F_{}[t]/({})", self.0.p, format_prime_poly(&self.0.modulus, 't'))
        }
    }
}

type Registry = Mutex<HashMap<(u32, Vec<u32>), &'static FieldData>>;

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| Mutex::new(HashMap::new()))
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Default irreducible moduli (Conway polynomials), low-to-high coefficients.
fn conway(p: u32, e: u32) -> Option<Vec<u32>> {
    let m: &[u32] = match (p, e) {
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (3, 2) => &[2, 2, 1],
        (3, 3) => &[1, 2, 0, 1],
        (3, 4) => &[2, 0, 0, 2, 1],
        (5, 2) => &[2, 4, 1],
        (5, 3) => &[3, 3, 0, 1],
        (5, 4) => &[2, 4, 4, 0, 1],
        (7, 2) => &[3, 6, 1],
        (7, 3) => &[4, 0, 6, 1],
        (7, 4) => &[3, 4, 5, 0, 1],
        _ => return None,
    };
    Some(m.to_vec())
}

// --- arithmetic on polynomials over F_p, used only to build the tables ---

fn pp_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn pp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = pp_trim(a.to_vec());
    let dm = m.len() - 1;
    let inv_lead = inv_mod(m[dm], p);
    while r.len() > dm {
        let k = r.len() - 1 - dm;
        let c = r[r.len() - 1] * inv_lead % p;
        for (i, &mi) in m.iter().enumerate() {
            r[k + i] = (r[k + i] + p * p - c * mi % p) % p;
        }
        r = pp_trim(r);
    }
    r
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        k >>= 1;
    }
    r as u32
}

/// Irreducibility over F_p by trial division with every monic polynomial
/// of degree at most `deg / 2`.
pub fn is_irreducible_prime_poly(m: &[u32], p: u32) -> bool {
    let m = pp_trim(m.to_vec());
    if m.len() < 2 {
        return false;
    }
    let d = m.len() - 1;
    for k in 1..=d / 2 {
        let count = (p as u64).pow(k as u32);
        for idx in 0..count {
            let mut f = Vec::with_capacity(k + 1);
            let mut x = idx;
            for _ in 0..k {
                f.push((x % p as u64) as u32);
                x /= p as u64;
            }
            f.push(1);
            if pp_rem(&m, &f, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn first_irreducible(p: u32, e: u32) -> Vec<u32> {
    let count = (p as u64).pow(e);
    for idx in 0..count {
        let mut f = Vec::with_capacity(e as usize + 1);
        let mut x = idx;
        for _ in 0..e {
            f.push((x % p as u64) as u32);
            x /= p as u64;
        }
        f.push(1);
        if is_irreducible_prime_poly(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn format_prime_poly(c: &[u32], var: char) -> String {
    let mut parts = Vec::new();
    for (i, &ci) in c.iter().enumerate().rev() {
        if ci == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (ci, i) {
            (_, 0) => ci.to_string(),
            (1, _) => mono,
            _ => format!("{ci}*{mono}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join("+")
    }
}

impl FieldData {
    fn build(p: u32, modulus: Vec<u32>) -> FieldData {
        let e = (modulus.len() - 1) as u32;
        let q = p.pow(e);
        let qs = q as usize;
        let coords = |x: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(e as usize);
            let mut x = x;
            for _ in 0..e {
                v.push(x % p);
                x /= p;
            }
            v
        };
        let pack = |v: &[u32]| -> u32 { v.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let mut add = vec![0u16; qs * qs];
        let mut mul = vec![0u16; qs * qs];
        let mut neg = vec![0u16; qs];
        let all: Vec<Vec<u32>> = (0..q).map(coords).collect();
        for a in 0..qs {
            neg[a] = pack(&all[a].iter().map(|&c| (p - c) % p).collect::<Vec<_>>()) as u16;
            for b in 0..qs {
                let s: Vec<u32> = all[a].iter().zip(&all[b]).map(|(x, y)| (x + y) % p).collect();
                add[a * qs + b] = pack(&s) as u16;
                if b < a {
                    mul[a * qs + b] = mul[b * qs + a];
                    continue;
                }
                let mut prod = vec![0u32; 2 * e as usize];
                for (i, &x) in all[a].iter().enumerate() {
                    for (j, &y) in all[b].iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                let mut r = pp_rem(&prod, &modulus, p);
                r.resize(e as usize, 0);
                mul[a * qs + b] = pack(&r) as u16;
            }
        }
        let mut inv = vec![0u16; qs];
        for a in 1..qs {
            for b in 1..qs {
                if mul[a * qs + b] == 1 {
                    inv[a] = b as u16;
                    break;
                }
            }
        }
        FieldData { p, e, q, modulus, add, mul, neg, inv }
    }
}

impl Field {
    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// F_{p^e}. Without a modulus, the built-in default is used for
    /// `e <= 4, p <= 7`, otherwise the first irreducible in lexicographic order.
    pub fn new(p: u32, e: u32, modulus: Option<Vec<u32>>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("{p} is not prime")));
        }
        if e == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(e).unwrap_or(u64::MAX);
        if q > MAX_Q as u64 {
            return Err(Error::InvalidField(format!("q = {p}^{e} exceeds {MAX_Q}")));
        }
        let modulus = match (e, modulus) {
            (1, None) => vec![0, 1],
            (1, Some(m)) => {
                let m = pp_trim(m.into_iter().map(|c| c % p).collect());
                if m.len() != 2 {
                    return Err(Error::InvalidField("modulus must have degree e".into()));
                }
                vec![0, 1]
            }
            (_, None) => conway(p, e).unwrap_or_else(|| first_irreducible(p, e)),
            (_, Some(m)) => {
                let mut m = pp_trim(m.into_iter().map(|c| c % p).collect());
                if m.len() != e as usize + 1 {
                    return Err(Error::InvalidField(format!("modulus must have degree {e}")));
                }
                let li = inv_mod(m[e as usize], p);
                for c in m.iter_mut() {
                    *c = *c * li % p;
                }
                m
            }
        };
        if e > 1 && !is_irreducible_prime_poly(&modulus, p) {
            return Err(Error::InvalidField(format!(
                "modulus {} is reducible over F_{p}",
                format_prime_poly(&modulus, 't')
            )));
        }
        let mut reg = registry().lock().expect("field registry poisoned");
        let key = (p, modulus.clone());
        if let Some(d) = reg.get(&key) {
            return Ok(Field(d));
        }
        let data: &'static FieldData = Box::leak(Box::new(FieldData::build(p, modulus)));
        reg.insert(key, data);
        Ok(Field(data))
    }

    /// The field of order `q` with the default modulus.
    pub fn with_order(q: u32) -> Result<Field> {
        for p in 2..=q {
            if q.is_multiple_of(p) {
                let mut e = 0;
                let mut r = q;
                while r.is_multiple_of(p) {
                    r /= p;
                    e += 1;
                }
                if r != 1 {
                    return Err(Error::InvalidField(format!("{q} is not a prime power")));
                }
                return Field::new(p, e, None);
            }
        }
        Err(Error::InvalidField(format!("{q} is not a prime power")))
    }

    #[inline]
    pub fn p(self) -> u32 {
        self.0.p
    }
    #[inline]
    pub fn e(self) -> u32 {
        self.0.e
    }
    #[inline]
    pub fn q(self) -> u32 {
        self.0.q
    }
    /// Monic modulus over F_p, low-to-high; `[0, 1]` for prime fields.
    pub fn modulus(self) -> &'static [u32] {
        &self.0.modulus
    }

    #[inline]
    pub fn add(self, a: u16, b: u16) -> u16 {
        self.0.add[a as usize * self.0.q as usize + b as usize]
    }
    #[inline]
    pub fn neg(self, a: u16) -> u16 {
        self.0.neg[a as usize]
    }
    #[inline]
    pub fn sub(self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }
    #[inline]
    pub fn mul(self, a: u16, b: u16) -> u16 {
        self.0.mul[a as usize * self.0.q as usize + b as usize]
    }
    /// Inverse of a nonzero element. Panics on zero.
    #[inline]
    pub fn inv(self, a: u16) -> u16 {
        assert!(a != 0, "inverse of zero in {self:?}");
        self.0.inv[a as usize]
    }
    #[inline]
    pub fn div(self, a: u16, b: u16) -> u16 {
        self.mul(a, self.inv(b))
    }

    /// Embeds an integer through F_p.
    pub fn from_int(self, n: i64) -> u16 {
        n.rem_euclid(self.0.p as i64) as u16
    }

    /// Coordinates over F_p in the basis `1, t, ..`.
    pub fn coords(self, a: u16) -> Vec<u32> {
        let mut v = Vec::with_capacity(self.0.e as usize);
        let mut x = a as u32;
        for _ in 0..self.0.e {
            v.push(x % self.0.p);
            x /= self.0.p;
        }
        v
    }

    pub fn from_coords(self, c: &[u32]) -> u16 {
        let p = self.0.p;
        let mut acc = 0u32;
        for i in (0..self.0.e as usize).rev() {
            acc = acc * p + c.get(i).copied().unwrap_or(0) % p;
        }
        acc as u16
    }

    /// All nonzero elements.
    pub fn units(self) -> impl Iterator<Item = u16> {
        1..self.0.q as u16
    }

    pub fn elements(self) -> impl Iterator<Item = u16> {
        0..self.0.q as u16
    }

    /// Text of an element: an integer for prime-subfield elements,
    /// otherwise a polynomial in `t`.
    pub fn format_elem(self, a: u16) -> String {
        if (a as u32) < self.0.p {
            a.to_string()
        } else {
            format_prime_poly(&self.coords(a), 't')
        }
    }
}

/// An element of F_q bound to its field.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct FqElem {
    pub field: Field,
    pub value: u16,
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format_elem(self.value))
    }
}

impl FqElem {
    pub fn new(field: Field, value: u16) -> Self {
        debug_assert!((value as u32) < field.q());
        FqElem { field, value }
    }
    pub fn is_zero(self) -> bool {
        self.value == 0
    }
    pub fn inv(self) -> Option<FqElem> {
        (self.value != 0).then(|| FqElem::new(self.field, self.field.inv(self.value)))
    }
}

impl std::ops::Add for FqElem {
    type Output = FqElem;
    fn add(self, o: FqElem) -> FqElem {
        FqElem::new(self.field, self.field.add(self.value, o.value))
    }
}
impl std::ops::Sub for FqElem {
    type Output = FqElem;
    fn sub(self, o: FqElem) -> FqElem {
        FqElem::new(self.field, self.field.sub(self.value, o.value))
    }
}
impl std::ops::Mul for FqElem {
    type Output = FqElem;
    fn mul(self, o: FqElem) -> FqElem {
        FqElem::new(self.field, self.field.mul(self.value, o.value))
    }
}
impl std::ops::Neg for FqElem {
    type Output = FqElem;
    fn neg(self) -> FqElem {
        FqElem::new(self.field, self.field.neg(self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_moduli_are_irreducible() {
        for p in [2, 3, 5, 7] {
            for e in 2..=4 {
                let m = conway(p, e).unwrap();
                assert!(is_irreducible_prime_poly(&m, p), "p={p} e={e}");
            }
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // t^2 + 1 = (t + 1)^2 over F_2
        assert!(Field::new(2, 2, Some(vec![1, 0, 1])).is_err());
        assert!(Field::new(4, 1, None).is_err());
    }

    #[test]
    fn f4_multiplication() {
        let f = Field::with_order(4).unwrap();
        let t = f.from_coords(&[0, 1]);
        // t^2 = t + 1 for the modulus t^2 + t + 1
        assert_eq!(f.mul(t, t), f.from_coords(&[1, 1]));
        for a in f.units() {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
