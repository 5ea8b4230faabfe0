//! Continued-fraction words `[a0; p1, .., pr, per: c1, .., ck]` and their
//! convergents and statistics.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::{parse_poly, Field, Poly, RatFunc};
use crate::error::{Error, Result};

/// An eventually periodic (or finite) continued fraction.
///
/// Canonical form: the period is primitive and no preperiod coefficient can be
/// absorbed into it. A purely periodic `[per: c0, .., c(k-1)]` is stored with
/// `a0 = c0` and period `c1, .., c(k-1), c0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CfWord {
    a0: Poly,
    preperiod: Vec<Poly>,
    period: Vec<Poly>,
}

/// Cyclic degree statistics of a period.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CfStats {
    /// `M`: largest degree.
    pub max_deg: usize,
    /// `m`: smallest degree.
    pub min_deg: usize,
    /// `M2`: largest sum of two cyclically adjacent degrees.
    pub max_pair: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergent {
    pub n: usize,
    pub p: Poly,
    pub q: Poly,
}

/// Smallest root of a cyclic sequence.
fn primitive(v: &[Poly]) -> Vec<Poly> {
    let k = v.len();
    for d in 1..=k {
        if k.is_multiple_of(d) && (d..k).all(|i| v[i] == v[i - d]) {
            return v[..d].to_vec();
        }
    }
    v.to_vec()
}

impl CfWord {
    pub fn new(a0: Poly, preperiod: Vec<Poly>, period: Vec<Poly>) -> Result<CfWord> {
        if let Some(p) = preperiod.iter().chain(period.iter()).find(|p| p.deg_opt().unwrap_or(0) == 0) {
            return Err(Error::Domain(format!("coefficient {p} after a0 must be nonconstant")));
        }
        let mut preperiod = preperiod;
        let mut period = primitive(&period);
        while !period.is_empty() && !preperiod.is_empty() && preperiod.last() == period.last() {
            preperiod.pop();
            period.rotate_right(1);
        }
        Ok(CfWord { a0, preperiod, period })
    }

    pub fn finite(a0: Poly, rest: Vec<Poly>) -> Result<CfWord> {
        CfWord::new(a0, rest, Vec::new())
    }

    /// `[per: c0, .., c(k-1)]`.
    pub fn purely_periodic(cycle: &[Poly]) -> Result<CfWord> {
        if cycle.is_empty() {
            return Err(Error::Domain("empty period".into()));
        }
        let cycle = primitive(cycle);
        let mut period = cycle[1..].to_vec();
        period.push(cycle[0].clone());
        CfWord::new(cycle[0].clone(), Vec::new(), period)
    }

    pub fn field(&self) -> Field {
        self.a0.field()
    }
    pub fn a0(&self) -> &Poly {
        &self.a0
    }
    pub fn preperiod(&self) -> &[Poly] {
        &self.preperiod
    }
    pub fn period(&self) -> &[Poly] {
        &self.period
    }
    pub fn is_finite(&self) -> bool {
        self.period.is_empty()
    }

    /// The `n`-th coefficient `a_n`, or `None` past the end of a finite word.
    pub fn coeff(&self, n: usize) -> Option<&Poly> {
        if n == 0 {
            return Some(&self.a0);
        }
        let i = n - 1;
        if i < self.preperiod.len() {
            return Some(&self.preperiod[i]);
        }
        if self.period.is_empty() {
            return None;
        }
        Some(&self.period[(i - self.preperiod.len()) % self.period.len()])
    }

    /// Number of coefficients of a finite word (including `a0`).
    pub fn len_finite(&self) -> Option<usize> {
        self.is_finite().then(|| 1 + self.preperiod.len())
    }

    /// True for `[per: ..]`, i.e. when `a0` starts the period.
    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty() && self.period.last() == Some(&self.a0)
    }

    /// The period read from its first occurrence in the tail `a1, a2, ..`.
    pub fn tail_cycle(&self) -> &[Poly] {
        &self.period
    }

    /// The purely periodic word `[per: tail cycle]`, which lies in the same orbit.
    pub fn periodic_tail(&self) -> Result<CfWord> {
        CfWord::purely_periodic(&self.period)
    }

    /// The cycle `c0, .., c(k-1)` of a purely periodic word.
    pub fn cycle(&self) -> Option<Vec<Poly>> {
        if !self.is_purely_periodic() {
            return None;
        }
        let k = self.period.len();
        let mut c = vec![self.a0.clone()];
        c.extend_from_slice(&self.period[..k - 1]);
        Some(c)
    }

    pub fn stats(&self) -> Result<CfStats> {
        let p = &self.period;
        if p.is_empty() {
            return Err(Error::Domain("stats need a nonempty period".into()));
        }
        let degs: Vec<usize> = p.iter().map(|x| x.deg()).collect();
        let k = degs.len();
        Ok(CfStats {
            max_deg: *degs.iter().max().unwrap(),
            min_deg: *degs.iter().min().unwrap(),
            max_pair: (0..k).map(|i| degs[i] + degs[(i + 1) % k]).max().unwrap(),
        })
    }

    /// `P_0/Q_0, .., P_n/Q_n`.
    pub fn convergents(&self, n: usize) -> Result<Vec<Convergent>> {
        if let Some(len) = self.len_finite() {
            if n >= len {
                return Err(Error::Domain(format!("word has only {len} coefficients")));
            }
        }
        let f = self.field();
        let (mut p0, mut p1) = (Poly::one(f), self.a0.clone());
        let (mut q0, mut q1) = (Poly::zero(f), Poly::one(f));
        let mut out = vec![Convergent { n: 0, p: p1.clone(), q: q1.clone() }];
        for i in 1..=n {
            let a = self.coeff(i).unwrap();
            let p2 = a.mul(&p1).add(&p0);
            let q2 = a.mul(&q1).add(&q0);
            p0 = std::mem::replace(&mut p1, p2);
            q0 = std::mem::replace(&mut q1, q2);
            out.push(Convergent { n: i, p: p1.clone(), q: q1.clone() });
        }
        Ok(out)
    }

    /// Value of a finite word.
    pub fn evaluate(&self) -> Result<RatFunc> {
        let len = self.len_finite().ok_or_else(|| Error::Domain("evaluate needs a finite word".into()))?;
        let c = self.convergents(len - 1)?.pop().unwrap();
        RatFunc::new(c.p, c.q)
    }

    /// Coefficients `a_0, .., a_{n-1}` (fewer for a short finite word).
    pub fn unroll(&self, n: usize) -> Vec<Poly> {
        (0..n).map_while(|i| self.coeff(i).cloned()).collect()
    }

    pub fn to_json(&self) -> Value {
        let s = |v: &[Poly]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>();
        json!({"a0": self.a0.to_string(), "preperiod": s(&self.preperiod), "period": s(&self.period)})
    }

    pub fn from_json(field: Field, v: &Value) -> Result<CfWord> {
        let bad = |m: &str| Error::Parse(format!("word JSON: {m}"));
        let a0 = v.get("a0").and_then(Value::as_str).ok_or_else(|| bad("missing a0"))?;
        let list = |key: &str| -> Result<Vec<Poly>> {
            match v.get(key) {
                None => Ok(Vec::new()),
                Some(Value::Array(items)) => items
                    .iter()
                    .map(|x| x.as_str().ok_or_else(|| bad(key)).and_then(|s| parse_poly(field, s)))
                    .collect(),
                Some(_) => Err(bad(key)),
            }
        };
        CfWord::new(parse_poly(field, a0)?, list("preperiod")?, list("period")?)
    }

    /// Parses `[a0; p1, p2, per: c1, c2]`, `[per: c0, c1]` or `[a0; p1]`.
    pub fn parse(field: Field, text: &str) -> Result<CfWord> {
        let t = text.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("word must be bracketed: {t}")))?;
        let polys = |s: &str| -> Result<Vec<Poly>> {
            s.split(',').map(str::trim).filter(|x| !x.is_empty()).map(|x| parse_poly(field, x)).collect()
        };
        let (head, per) = match inner.find("per:") {
            Some(i) => (&inner[..i], Some(&inner[i + 4..])),
            None => (inner, None),
        };
        let head = head.trim().trim_end_matches(',').trim();
        let (a0, pre) = match head.find(';') {
            Some(i) => (Some(parse_poly(field, &head[..i])?), polys(&head[i + 1..])?),
            None if head.is_empty() => (None, Vec::new()),
            None => {
                let mut v = polys(head)?;
                let a0 = v.remove(0);
                (Some(a0), v)
            }
        };
        let period = match per {
            Some(p) => polys(p)?,
            None => Vec::new(),
        };
        match a0 {
            Some(a0) => CfWord::new(a0, pre, period),
            None => CfWord::purely_periodic(&period),
        }
    }
}

impl fmt::Display for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Poly]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
        if let Some(c) = self.cycle() {
            return write!(f, "[per: {}]", join(&c));
        }
        write!(f, "[{}", self.a0)?;
        if !self.preperiod.is_empty() || !self.period.is_empty() {
            write!(f, ";")?;
        }
        if !self.preperiod.is_empty() {
            write!(f, " {}", join(&self.preperiod))?;
            if !self.period.is_empty() {
                write!(f, ",")?;
            }
        }
        if !self.period.is_empty() {
            write!(f, " per: {}", join(&self.period))?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CfWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::prime(3).unwrap()
    }
    fn w(s: &str) -> CfWord {
        CfWord::parse(f3(), s).unwrap()
    }

    #[test]
    fn canonical_forms() {
        let phi = w("[per: Y]");
        assert_eq!(phi.a0(), &Poly::y(f3()));
        assert_eq!(phi.period(), &[Poly::y(f3())]);
        assert_eq!(w("[Y; per: Y]"), phi);
        assert_eq!(w("[Y; Y, Y, per: Y, Y]"), phi);
        assert_eq!(w("[per: Y, Y^2, Y, Y^2]"), w("[per: Y, Y^2]"));
        assert_eq!(phi.to_string(), "[per: Y]");
        let g = w("[0; per: Y^2, Y]");
        assert_eq!(g.to_string(), "[0; per: Y^2, Y]");
        assert_eq!(CfWord::from_json(f3(), &g.to_json()).unwrap(), g);
        assert!(CfWord::parse(f3(), "[0; 1, per: Y]").is_err());
    }

    #[test]
    fn stats_examples() {
        let s = w("[per: Y]").stats().unwrap();
        assert_eq!((s.max_deg, s.min_deg, s.max_pair), (1, 1, 2));
        let s = w("[per: Y, Y^2]").stats().unwrap();
        assert_eq!((s.max_deg, s.min_deg, s.max_pair), (2, 1, 3));
        let s = w("[0; per: Y^2, Y^3, Y]").stats().unwrap();
        assert_eq!((s.max_deg, s.min_deg, s.max_pair), (3, 1, 5));
    }

    #[test]
    fn convergent_examples() {
        let f = f3();
        let c = w("[Y; Y]").convergents(1).unwrap();
        assert_eq!(c[1].p, parse_poly(f, "Y^2+1").unwrap());
        assert_eq!(c[1].q, Poly::y(f));
        let c = w("[per: Y]").convergents(2).unwrap();
        assert_eq!(c[2].p, parse_poly(f, "Y^3+2*Y").unwrap());
        assert_eq!(c[2].q, parse_poly(f, "Y^2+1").unwrap());
        assert_eq!(c[0].p, Poly::y(f));
    }
}
