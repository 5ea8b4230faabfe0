//! Overlaps of translates of an axis with the ray `]∞, x[`, and the liminf
//! estimate of `c_α(x)` over a finite prefix of the expansion of `x`.
//!
//! Crossing `n` of the ray sits in the frame `G = M(a_0) .. M(a_{n-1})`, where
//! the ray reads `]ρ_n, x_n[` with `ρ_n = -[0; a_{n-1}, .., a_1]` and
//! `x_n = [a_n; a_{n+1}, ..]`. Positions count edges from the first vertex of
//! crossing 1.

use std::collections::BTreeMap;

use serde_json::json;

use crate::algebra::{Poly, Series};
use crate::btree::BoundaryPoint;
use crate::contfrac::{cf_expand_series, CfWord};
use crate::error::{Error, Result};
use crate::modgroup::{Axis, GroupElement};

use super::certificate::{Argument, CertKind, Certificate, SearchBudget};
use super::engine::{domain_lines, local_overlap, stabilized_lines, LocalLine, Pt, StabilizedLines};
use super::ApproxValue;

/// A common segment of `]∞, x[` and a translate of the axis, in ray positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySegment {
    pub start: i64,
    pub end: i64,
    /// The segment may continue past the known part of the ray.
    pub truncated: bool,
    /// `g` with `g . Ax_α` containing the segment.
    pub witness: GroupElement,
}

impl RaySegment {
    pub fn len(&self) -> i64 {
        self.end - self.start
    }
    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }
}

#[derive(Clone, Debug)]
pub struct RayScan {
    pub segments: Vec<RaySegment>,
    /// Position of the first vertex of crossing `n`, for `n = 1..=N+1`.
    pub crossing_start: Vec<i64>,
    /// Last position whose vertex is determined by the prefix.
    pub end: i64,
}

struct RayVertex {
    pos: i64,
    h: i64,
    crossing: usize,
    shift: Poly,
}

/// Every translate of `Ax_α` meeting the ray of `[a_0; a_1, .., a_N]` in at
/// least one vertex of crossings `1..=N`, one entry per common segment.
pub fn scan_ray(ax: &Axis, coeffs: &[Poly]) -> Result<RayScan> {
    if coeffs.len() < 2 {
        return Err(Error::Domain("the ray needs at least one partial quotient past a_0".into()));
    }
    let f = ax.alpha.field();
    let n_last = coeffs.len() - 1;
    let mut starts = vec![0i64];
    for a in &coeffs[1..] {
        if a.deg_opt().unwrap_or(0) == 0 {
            return Err(Error::Domain("partial quotients past a_0 must be nonconstant".into()));
        }
        starts.push(starts.last().unwrap() + 2 * a.deg() as i64);
    }
    let end = *starts.last().unwrap();
    let maxdeg = coeffs[1..].iter().chain(ax.cycle().iter()).map(Poly::deg).max().unwrap() as i64;
    let horizon = end + 4 * maxdeg + 64;

    // x_n for n = N..1 and rho_n for n = 1..N
    let mut xs = vec![Series::zero(f); n_last + 1];
    let mut x = Series::from_poly(&coeffs[n_last]);
    xs[n_last] = x.clone();
    for n in (1..n_last).rev() {
        x = Series::from_poly(&coeffs[n]).add(&x.inv(horizon)?).truncate(horizon);
        xs[n] = x.clone();
    }
    let mut rhos = vec![Series::zero(f); n_last + 1];
    let mut y = Series::zero(f);
    for n in 1..=n_last {
        rhos[n] = y.neg();
        y = Series::from_poly(&coeffs[n]).add(&y).inv(horizon)?.truncate(horizon);
    }

    let mut verts = Vec::new();
    for n in 1..=n_last {
        let a = &coeffs[n];
        let d = a.deg() as i64;
        for h in 0..=d {
            verts.push(RayVertex { pos: starts[n - 1] + h, h, crossing: n, shift: Poly::zero(f) });
        }
        for h in (1..d).rev() {
            verts.push(RayVertex { pos: starts[n - 1] + 2 * d - h, h, crossing: n, shift: a.above(h as usize) });
        }
    }

    let dom = domain_lines(ax, horizon)?;
    let sl: StabilizedLines = stabilized_lines(&dom, horizon)?;
    let mut found: BTreeMap<(i64, i64), (bool, usize, usize, usize)> = BTreeMap::new();
    for (ri, rv) in verts.iter().enumerate() {
        let Some(cands) = sl.by_height.get(&rv.h) else { continue };
        let sh = Series::from_poly(&rv.shift);
        let line = LocalLine { back: Pt::new(rhos[rv.crossing].sub(&sh))?, fwd: Pt::new(xs[rv.crossing].sub(&sh))? };
        for (ci, (_, _, ls)) in cands.iter().enumerate() {
            let (start, stop, trunc) = match local_overlap(&line, ls, rv.h) {
                Some((b, fw, _)) => (rv.pos - b, rv.pos + fw, rv.pos + fw >= end),
                None => (rv.pos, end, true),
            };
            found.entry((start, stop.min(end))).or_insert((trunc, ri, rv.h as usize, ci));
        }
    }

    // frames G_{n-1} for the crossings that carry a segment
    let mut frames: BTreeMap<usize, GroupElement> = BTreeMap::new();
    let mut g = GroupElement::identity(f);
    let needed: std::collections::BTreeSet<usize> = found.values().map(|v| verts[v.1].crossing).collect();
    for n in 1..=n_last {
        g = g.mul(&GroupElement::cf_step(&coeffs[n - 1]));
        if needed.contains(&n) {
            frames.insert(n, g.clone());
        }
    }
    let segments = found
        .into_iter()
        .map(|((start, stop), (truncated, ri, h, ci))| {
            let rv = &verts[ri];
            let (wi, s, _) = &sl.by_height[&(h as i64)][ci];
            let r = frames[&rv.crossing].mul(&GroupElement::translation(&rv.shift));
            let witness = r.mul(s).mul(&dom[*wi].0.frame.inverse());
            RaySegment { start, end: stop, truncated, witness }
        })
        .collect();
    Ok(RayScan { segments, crossing_start: starts, end })
}

/// Greedy count of pairwise disjoint segments.
fn disjoint_count<'a>(segs: impl Iterator<Item = &'a RaySegment>) -> usize {
    let mut v: Vec<&RaySegment> = segs.collect();
    v.sort_by_key(|s| (s.end, s.start));
    let mut last = i64::MIN;
    let mut count = 0;
    for s in v {
        if s.start >= last {
            count += 1;
            last = s.end;
        }
    }
    count
}

/// Interval estimate of `c_α(x)` from a scan.
#[derive(Clone, Debug)]
pub struct StreamEstimate {
    /// `q^{-L}`, `L` the longest overlap seen past the warm-up.
    pub lower: ApproxValue,
    /// `q^{-U}`, `U` the longest overlap recurring at least the threshold number of times.
    pub upper: ApproxValue,
    pub certificate: Certificate,
}

impl StreamEstimate {
    pub fn is_exact(&self) -> bool {
        self.certificate.kind == CertKind::Exact
    }
}

/// The liminf estimate over the coefficients `a_0, .., a_H`.
pub fn c_alpha_stream_coeffs(ax: &Axis, coeffs: &[Poly], budget: &SearchBudget) -> Result<StreamEstimate> {
    let scan = scan_ray(ax, coeffs)?;
    let warm = budget.warmup.min(coeffs.len() - 2);
    let warm_pos = scan.crossing_start[warm];
    let past: Vec<&RaySegment> = scan.segments.iter().filter(|s| s.start >= warm_pos).collect();
    let l = past.iter().map(|s| s.len()).max();
    let exact: Vec<&RaySegment> = past.iter().copied().filter(|s| !s.truncated).collect();
    let mut lens: Vec<i64> = exact.iter().map(|s| s.len()).collect();
    lens.sort_unstable();
    lens.dedup();
    let mut u = None;
    let mut recurrences = 0;
    for &len in lens.iter().rev() {
        let c = disjoint_count(exact.iter().copied().filter(|s| s.len() >= len));
        if c >= budget.recurrence_threshold {
            u = Some(len);
            recurrences = c;
            break;
        }
    }
    let lower = l.map_or(ApproxValue::Pow(0), |l| ApproxValue::Pow(-l));
    let upper = u.map_or(ApproxValue::Pow(0), |u| ApproxValue::Pow(-u));
    let exact_value = u.is_some() && u == l;
    let mut cert = Certificate::new(
        if exact_value { CertKind::Exact } else { CertKind::Interval },
        if exact_value { Argument::WordMatchComplete } else { Argument::BudgetExhausted },
    );
    if let Some(best) = past.iter().filter(|s| Some(s.len()) == u).min_by_key(|s| s.start) {
        cert.witnesses.push(best.witness.clone());
    }
    cert.steps = scan.segments.len() as u64;
    cert.evidence = json!({
        "longest_seen": l,
        "longest_recurring": u,
        "recurrences": recurrences,
        "threshold": budget.recurrence_threshold,
        "warmup_position": warm_pos,
        "known_positions": scan.end,
        "coefficients": coeffs.len(),
    });
    Ok(StreamEstimate { lower, upper, certificate: cert })
}

/// Coefficients of a target read from a word or a series, `H + 1` of them.
pub fn stream_coefficients(x: &BoundaryPoint, word: Option<&CfWord>, horizon: usize) -> Result<Vec<Poly>> {
    if let Some(w) = word {
        let c = w.unroll(horizon + 1);
        if c.len() < horizon + 1 {
            return Err(Error::Domain(format!("rational within horizon: {} coefficients", c.len())));
        }
        return Ok(c);
    }
    let s = x.series().ok_or_else(|| Error::Domain("target is ∞".into()))?;
    let e = cf_expand_series(s, horizon + 1);
    if e.terminated {
        return Err(Error::Domain(format!("rational within horizon: {} coefficients", e.coeffs.len())));
    }
    if e.coeffs.len() < horizon + 1 {
        return Err(crate::error::precision(format!("series determines only {} coefficients", e.coeffs.len())));
    }
    Ok(e.coeffs)
}

/// `c_α(x)` for a target known through its expansion.
pub fn c_alpha_stream(ax: &Axis, x: &CfWord, budget: &SearchBudget) -> Result<StreamEstimate> {
    let coeffs = stream_coefficients(&BoundaryPoint::Infinity, Some(x), budget.stream_horizon)?;
    c_alpha_stream_coeffs(ax, &coeffs, budget)
}
