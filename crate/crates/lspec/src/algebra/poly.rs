//! Polynomials in F_q[Y].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::field::Field;

/// Degree of a polynomial. The zero polynomial has degree `NegInf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Fin(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Fin(d) => Some(d),
        }
    }
}

/// A polynomial, coefficients stored low-to-high with no trailing zeros.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    coeffs: Vec<u16>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.field == other.field
    }
}
impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

/// Orders by degree, then by coefficients from the top down.
impl Ord for Poly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}
impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_poly(self))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", super::text::format_poly(self))
    }
}

fn trim(v: &mut Vec<u16>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Poly {
    pub fn from_coeffs(field: Field, mut coeffs: Vec<u16>) -> Poly {
        trim(&mut coeffs);
        Poly { field, coeffs }
    }
    pub fn zero(field: Field) -> Poly {
        Poly { field, coeffs: Vec::new() }
    }
    pub fn one(field: Field) -> Poly {
        Poly::constant(field, 1)
    }
    pub fn constant(field: Field, c: u16) -> Poly {
        Poly::from_coeffs(field, vec![c])
    }
    /// `c * Y^k`.
    pub fn monomial(field: Field, c: u16, k: usize) -> Poly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly::from_coeffs(field, v)
    }
    /// The variable `Y`.
    pub fn y(field: Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    pub fn field(&self) -> Field {
        self.field
    }
    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> u16 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Fin(n - 1),
        }
    }
    /// Degree of a nonzero polynomial; panics on zero.
    pub fn deg(&self) -> usize {
        self.degree().finite().expect("degree of the zero polynomial")
    }
    /// Degree with zero mapped to `None`.
    pub fn deg_opt(&self) -> Option<usize> {
        self.degree().finite()
    }
    pub fn leading(&self) -> u16 {
        self.coeffs.last().copied().unwrap_or(0)
    }
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }
    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect();
        Poly::from_coeffs(f, v)
    }
    pub fn sub(&self, o: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        let v = (0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect();
        Poly::from_coeffs(f, v)
    }
    pub fn neg(&self) -> Poly {
        let f = self.field;
        Poly { field: f, coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect() }
    }
    pub fn scale(&self, c: u16) -> Poly {
        let f = self.field;
        Poly::from_coeffs(f, self.coeffs.iter().map(|&x| f.mul(x, c)).collect())
    }
    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut v = vec![0u16; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = f.add(v[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(f, v)
    }
    /// Multiplication by `Y^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        Poly { field: self.field, coeffs: v }
    }

    /// Euclidean division; panics when dividing by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = self.field;
        let dd = d.coeffs.len() - 1;
        let il = f.inv(d.leading());
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(f), self.clone());
        }
        let mut qv = vec![0u16; r.len() - dd];
        for k in (0..qv.len()).rev() {
            let c = f.mul(r[k + dd], il);
            qv[k] = c;
            if c != 0 {
                for (i, &di) in d.coeffs.iter().enumerate() {
                    r[k + i] = f.sub(r[k + i], f.mul(c, di));
                }
            }
        }
        (Poly::from_coeffs(f, qv), Poly::from_coeffs(f, r))
    }
    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }
    /// Exact quotient if `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Scales to a monic polynomial (zero stays zero).
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s, t)` with `s*self + t*o = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s2 = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let il = f.inv(r0.leading());
        (r0.scale(il), s0.scale(il), t0.scale(il))
    }

    pub fn pow(&self, mut k: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    /// The part of degree strictly greater than `h`.
    pub fn above(&self, h: usize) -> Poly {
        if self.coeffs.len() <= h + 1 {
            return Poly::zero(self.field);
        }
        let mut v = vec![0; h + 1];
        v.extend_from_slice(&self.coeffs[h + 1..]);
        Poly { field: self.field, coeffs: v }
    }

    /// The part of degree at most `h`.
    pub fn at_most(&self, h: usize) -> Poly {
        let n = self.coeffs.len().min(h + 1);
        Poly::from_coeffs(self.field, self.coeffs[..n].to_vec())
    }

    /// Polynomial square root if `self` is a perfect square (odd characteristic).
    pub fn sqrt(&self) -> Option<Poly> {
        let f = self.field;
        if self.is_zero() {
            return Some(self.clone());
        }
        if f.p() == 2 {
            return None;
        }
        let d = self.deg();
        if d % 2 == 1 {
            return None;
        }
        let lead = self.leading();
        let r0 = f.elements().find(|&x| f.mul(x, x) == lead)?;
        // Determine the root top-down: (r0 Y^k + ...)^2 matches coefficients.
        let k = d / 2;
        let mut root = vec![0u16; k + 1];
        root[k] = r0;
        let two_r0_inv = f.inv(f.add(r0, r0));
        for i in (0..k).rev() {
            // coefficient of Y^{k+i} in root^2, using already fixed terms
            let mut s = 0u16;
            for j in (i + 1)..=k {
                let l = k + i - j;
                if l > j || l <= i {
                    continue;
                }
                let term = f.mul(root[j], root[l]);
                s = f.add(s, if l == j { term } else { f.add(term, term) });
            }
            root[i] = f.mul(f.sub(self.coeff(k + i), s), two_r0_inv);
        }
        let r = Poly::from_coeffs(f, root);
        (r.mul(&r) == *self).then_some(r)
    }

    /// All polynomials of degree exactly `d`, in the deterministic order of
    /// their coefficient tuples (low-to-high digits counting up).
    pub fn all_of_degree(field: Field, d: usize) -> Vec<Poly> {
        let q = field.q() as u64;
        let low = q.pow(d as u32);
        let mut out = Vec::with_capacity((low * (q - 1)) as usize);
        for lead in field.units() {
            for idx in 0..low {
                let mut v = Vec::with_capacity(d + 1);
                let mut x = idx;
                for _ in 0..d {
                    v.push((x % q) as u16);
                    x /= q;
                }
                v.push(lead);
                out.push(Poly { field, coeffs: v });
            }
        }
        out
    }

    /// All polynomials of degree at most `d` (including zero).
    pub fn all_up_to_degree(field: Field, d: usize) -> Vec<Poly> {
        let q = field.q() as u64;
        let count = q.pow(d as u32 + 1);
        (0..count)
            .map(|idx| {
                let mut v = Vec::with_capacity(d + 1);
                let mut x = idx;
                for _ in 0..=d {
                    v.push((x % q) as u16);
                    x /= q;
                }
                Poly::from_coeffs(field, v)
            })
            .collect()
    }
}
