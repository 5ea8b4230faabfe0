//! Text grammar for polynomials: `Y^2+2*Y+1`, `(t+1)*Y^2+t`, `0`.
//!
//! A term is a `*`-separated product of factors; a factor is an integer,
//! `t`, `t^k`, `Y`, `Y^k` or a parenthesized sum of such terms (without `Y`).
//! `t` is the root of the field modulus. Whitespace is ignored.

use super::field::Field;
use super::poly::Poly;
use crate::error::{Error, Result};

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    field: Field,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(perr(format!("expected a number at offset {start}")));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| perr("number too large"))
    }

    fn exponent(&mut self) -> Result<usize> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            Ok(self.number()? as usize)
        } else {
            Ok(1)
        }
    }

    /// Sum of terms; `allow_y` is false inside parentheses.
    fn sum(&mut self, allow_y: bool) -> Result<Poly> {
        let f = self.field;
        let mut acc = Poly::zero(f);
        let mut negate = false;
        if self.peek() == Some(b'-') {
            negate = true;
            self.pos += 1;
        }
        loop {
            let term = self.term(allow_y)?;
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(b'+') => negate = false,
                Some(b'-') => negate = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term(&mut self, allow_y: bool) -> Result<Poly> {
        let f = self.field;
        let mut acc = Poly::one(f);
        loop {
            let factor = match self.peek() {
                Some(b'0'..=b'9') => {
                    let n = self.number()?;
                    Poly::constant(f, (n % f.p() as u64) as u16)
                }
                Some(b't') => {
                    if f.e() == 1 {
                        return Err(perr("'t' used over a prime field"));
                    }
                    self.pos += 1;
                    let k = self.exponent()?;
                    Poly::constant(f, t_power(f, k))
                }
                Some(b'Y') if allow_y => {
                    self.pos += 1;
                    let k = self.exponent()?;
                    Poly::monomial(f, 1, k)
                }
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.sum(false)?;
                    if self.peek() != Some(b')') {
                        return Err(perr(format!("expected ')' at offset {}", self.pos)));
                    }
                    self.pos += 1;
                    inner
                }
                Some(c) => return Err(perr(format!("unexpected '{}' at offset {}", c as char, self.pos))),
                None => return Err(perr("unexpected end of input")),
            };
            acc = acc.mul(&factor);
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok(acc);
            }
        }
    }
}

fn t_power(f: Field, k: usize) -> u16 {
    let t = if f.e() == 1 { 0 } else { f.from_coords(&[0, 1]) };
    let mut acc = 1u16;
    for _ in 0..k {
        acc = f.mul(acc, t);
    }
    acc
}

/// Parses a polynomial over `field`.
pub fn parse_poly(field: Field, text: &str) -> Result<Poly> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(perr("empty polynomial"));
    }
    let mut p = Parser { s: cleaned.as_bytes(), pos: 0, field };
    let out = p.sum(true)?;
    if p.pos != p.s.len() {
        return Err(perr(format!("trailing input at offset {}", p.pos)));
    }
    Ok(out)
}

/// Parses a field element (integer or `t`-polynomial).
pub fn parse_elem(field: Field, text: &str) -> Result<u16> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser { s: cleaned.as_bytes(), pos: 0, field };
    let out = p.sum(false)?;
    if p.pos != p.s.len() {
        return Err(perr(format!("trailing input at offset {}", p.pos)));
    }
    Ok(out.coeff(0))
}

/// Canonical text: descending powers, unit coefficients omitted.
pub fn format_poly(poly: &Poly) -> String {
    let f = poly.field();
    if poly.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (k, &c) in poly.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = f.format_elem(c);
        let coef = if coef.contains('+') { format!("({coef})") } else { coef };
        let mono = match k {
            0 => String::new(),
            1 => "Y".into(),
            _ => format!("Y^{k}"),
        };
        parts.push(match (k, c) {
            (0, _) => coef,
            (_, 1) => mono,
            _ => format!("{coef}*{mono}"),
        });
    }
    parts.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_prime() {
        let f = Field::prime(3).unwrap();
        let p = parse_poly(f, "Y^2 + 2*Y + 1").unwrap();
        assert_eq!(p.coeffs(), &[1, 2, 1]);
        assert_eq!(format_poly(&p), "Y^2+2*Y+1");
        assert_eq!(parse_poly(f, "0").unwrap(), Poly::zero(f));
        assert_eq!(parse_poly(f, "Y-1").unwrap().coeffs(), &[2, 1]);
    }

    #[test]
    fn round_trip_extension() {
        let f = Field::with_order(4).unwrap();
        let p = parse_poly(f, "(t+1)*Y^2 + t").unwrap();
        assert_eq!(format_poly(&p), "(t+1)*Y^2+t");
        assert_eq!(parse_poly(f, &format_poly(&p)).unwrap(), p);
    }

    #[test]
    fn rejects_garbage() {
        let f = Field::prime(3).unwrap();
        assert!(parse_poly(f, "Y^").is_err());
        assert!(parse_poly(f, "X+1").is_err());
        assert!(parse_poly(f, "t*Y").is_err());
    }
}
