//! `n(α, β)`: the longest common segment of `]α^σ, α[` and a translate of
//! `]β^σ, β[`.
//!
//! Engine A pairs the vertices of one period of each axis. A common segment
//! contains a vertex of `Ax_α`, which may be moved into the fundamental domain
//! by a power of `γ_α`; its preimage on `Ax_β` may likewise be moved into the
//! fundamental domain of `β`. Both then have the same height `h` and the
//! translate is `F_p s F_w^{-1}` with `s` in the stabilizer of `u_h`, so the
//! finite search over `(p, w, s)` sees every translate up to the axis
//! stabilizers. Engine B scans a bounded enumeration of the group instead.

use std::collections::BTreeMap;

use serde_json::json;

use crate::algebra::{ExtInt, Poly, QuadraticIrrational, Series};
use crate::btree::{intersection, BoundaryPoint, Intersection, Line};
use crate::contfrac::{cycle_quadratic, rotation_series};
use crate::error::{precision, Error, Result};
use crate::modgroup::{axis_of, enumerate_group, ray_stabilizer, Axis, DomainVertex, GroupElement};

use super::certificate::{Argument, CertKind, Certificate, EngineBReport, SearchBudget};
use super::ApproxValue;

/// A boundary point in local coordinates with its valuation.
#[derive(Clone, Debug)]
pub(crate) struct Pt {
    pub s: Series,
    /// `None` for an exact zero.
    pub v: Option<i64>,
}

impl Pt {
    pub fn new(s: Series) -> Result<Pt> {
        let v = match s.val()? {
            ExtInt::Fin(v) => Some(v),
            _ => None,
        };
        Ok(Pt { s, v })
    }
}

/// A line through `u_h`, oriented from `back` to `fwd`.
#[derive(Clone, Debug)]
pub(crate) struct LocalLine {
    pub back: Pt,
    pub fwd: Pt,
}

impl LocalLine {
    pub fn transformed(&self, g: &GroupElement, cap: i64) -> Result<LocalLine> {
        let (a, b, c, d) = g.entries();
        let img = |p: &Pt| -> Result<Pt> {
            match p.s.mobius(a, b, c, d, cap)? {
                Some(s) => Pt::new(s),
                None => Err(Error::Domain("local line sent through ∞".into())),
            }
        };
        Ok(LocalLine { back: img(&self.back)?, fwd: img(&self.fwd)? })
    }
}

/// `(x|y)` at `u_h`; `None` when the digits run out or the points coincide.
pub(crate) fn gromov_pt(x: &Pt, y: &Pt, h: i64) -> Option<i64> {
    let lift = |v: Option<i64>| v.map_or(0, |v| (v + h).min(0));
    match x.s.val_diff(&y.s) {
        crate::algebra::DiffVal::At(v) => Some(v + h - lift(x.v) - lift(y.v)),
        _ => None,
    }
}

/// Common segment of two lines through `u_h`: lengths towards `l1.back` and
/// `l1.fwd`, and whether the lines run the same way. `None` if undetermined.
pub(crate) fn local_overlap(l1: &LocalLine, l2: &LocalLine, h: i64) -> Option<(i64, i64, bool)> {
    let bb = gromov_pt(&l1.back, &l2.back, h)?;
    let ff = gromov_pt(&l1.fwd, &l2.fwd, h)?;
    let bf = gromov_pt(&l1.back, &l2.fwd, h)?;
    let fb = gromov_pt(&l1.fwd, &l2.back, h)?;
    Some(if bb + ff >= bf + fb { (bb, ff, true) } else { (bf, fb, false) })
}

/// Local lines at the vertices of one period of an axis, at digit horizon `h`.
pub(crate) fn domain_lines(axis: &Axis, horizon: i64) -> Result<Vec<(DomainVertex, LocalLine)>> {
    let cycle = axis.cycle();
    let k = cycle.len();
    let rots = rotation_series(cycle, horizon);
    let rev: Vec<Poly> = cycle.iter().rev().cloned().collect();
    let rrots = rotation_series(&rev, horizon);
    // conj(alpha_j) = -1/[per: c_{j-1}, c_{j-2}, ..]
    let conj: Vec<Series> = (0..k).map(|j| rrots[(k - j) % k].inv(horizon).map(|s| s.neg())).collect::<Result<_>>()?;
    axis.fundamental_domain()
        .into_iter()
        .map(|dv| {
            let sh = Series::from_poly(&dv.shift);
            let line = LocalLine {
                back: Pt::new(conj[dv.crossing].sub(&sh))?,
                fwd: Pt::new(rots[dv.crossing].sub(&sh))?,
            };
            Ok((dv, line))
        })
        .collect()
}

/// Lines `s . L_w` for every vertex `w` of a domain and every `s` fixing `u_h`,
/// grouped by height.
pub(crate) struct StabilizedLines {
    pub by_height: BTreeMap<i64, Vec<(usize, GroupElement, LocalLine)>>,
}

pub(crate) fn stabilized_lines(dom: &[(DomainVertex, LocalLine)], cap: i64) -> Result<StabilizedLines> {
    let mut stabs: BTreeMap<i64, Vec<GroupElement>> = BTreeMap::new();
    let mut by_height: BTreeMap<i64, Vec<(usize, GroupElement, LocalLine)>> = BTreeMap::new();
    for (i, (dv, line)) in dom.iter().enumerate() {
        let f = dv.frame.field();
        let st = stabs.entry(dv.h).or_insert_with(|| ray_stabilizer(f, dv.h));
        let slot = by_height.entry(dv.h).or_default();
        for s in st.iter() {
            slot.push((i, s.clone(), line.transformed(s, cap)?));
        }
    }
    Ok(StabilizedLines { by_height })
}

/// Best translate found by Engine A.
#[derive(Clone, Debug)]
pub struct EngineAResult {
    pub n: i64,
    /// `g` with `g . Ax_β` meeting `Ax_α` in `n` edges.
    pub witness: GroupElement,
    /// The same translate between the rotation axes `Ax_{α_j}` and `Ax_{β_i}`.
    pub local: GroupElement,
    pub alpha_rotation: usize,
    pub beta_rotation: usize,
    pub same_orientation: bool,
    pub horizon: i64,
    pub pairs: u64,
}

pub enum EngineAOutcome {
    Finite(EngineAResult),
    /// The axes are translates; `g . β ∈ {α, α^σ}`.
    Equivalent(GroupElement),
}

fn rotated(cycle: &[Poly], j: usize) -> Vec<Poly> {
    cycle[j..].iter().chain(cycle[..j].iter()).cloned().collect()
}

/// Exact comparison of the two local lines: endpoints as quadratics.
fn lines_coincide(ax: &Axis, p: &DomainVertex, bx: &Axis, w: &DomainVertex, s: &GroupElement) -> Result<bool> {
    let f = ax.alpha.field();
    let one = Poly::one(f);
    let zero = Poly::zero(f);
    let qa = cycle_quadratic(&rotated(ax.cycle(), p.crossing)).mobius(&one, &p.shift.neg(), &zero, &one)?;
    let qb = cycle_quadratic(&rotated(bx.cycle(), w.crossing)).mobius(&one, &w.shift.neg(), &zero, &one)?;
    let qb = s.apply_quadratic(&qb)?;
    Ok(qa.same_root(&qb) || qa.same_root(&qb.conjugate()))
}

fn initial_horizon(ax: &Axis, bx: &Axis) -> i64 {
    let md = |a: &Axis| a.cycle().iter().map(Poly::deg).max().unwrap() as i64;
    32 + 4 * (md(ax) + md(bx))
}

/// Engine A on two axes.
pub fn engine_a(ax: &Axis, bx: &Axis, budget: &SearchBudget) -> Result<EngineAOutcome> {
    let mut horizon = initial_horizon(ax, bx);
    loop {
        let da = domain_lines(ax, horizon)?;
        let db = domain_lines(bx, horizon)?;
        let sb = stabilized_lines(&db, horizon)?;
        let mut best: Option<(i64, usize, usize, GroupElement, bool)> = None;
        let mut undetermined = Vec::new();
        let mut pairs = 0u64;
        for (pi, (p, lp)) in da.iter().enumerate() {
            let Some(cands) = sb.by_height.get(&p.h) else { continue };
            for (wi, s, ls) in cands {
                pairs += 1;
                if pairs > budget.max_steps {
                    return Err(Error::BudgetExceeded { steps: pairs as usize, partial: Vec::new() });
                }
                match local_overlap(lp, ls, p.h) {
                    Some((x, y, same)) => {
                        if best.as_ref().is_none_or(|b| x + y > b.0) {
                            best = Some((x + y, pi, *wi, s.clone(), same));
                        }
                    }
                    None => undetermined.push((pi, *wi, s.clone())),
                }
            }
        }
        let mut need_more = false;
        for (pi, wi, s) in &undetermined {
            let (p, w) = (&da[*pi].0, &db[*wi].0);
            if lines_coincide(ax, p, bx, w, s)? {
                return Ok(EngineAOutcome::Equivalent(p.frame.mul(s).mul(&w.frame.inverse())));
            }
            need_more = true;
        }
        if need_more {
            horizon *= 2;
            if horizon > budget.max_horizon {
                return Err(precision(format!("overlap undetermined at horizon {}", horizon / 2)));
            }
            continue;
        }
        let (n, pi, wi, s, same) = best.expect("both domains contain a vertex of height 0");
        let (p, w) = (&da[pi].0, &db[wi].0);
        let local = GroupElement::translation(&p.shift)
            .mul(&s)
            .mul(&GroupElement::translation(&w.shift.neg()));
        return Ok(EngineAOutcome::Finite(EngineAResult {
            n,
            witness: p.frame.mul(&s).mul(&w.frame.inverse()),
            local,
            alpha_rotation: p.crossing,
            beta_rotation: w.crossing,
            same_orientation: same,
            horizon,
            pairs,
        }));
    }
}

/// Engine B: the best overlap of `Ax_{α_j}` with `g . Ax_{β_i}` over `g` of
/// entry degree `<= bound` and the given rotation pairs, by the four-point
/// formula. Undetermined intersections are skipped and counted.
pub fn engine_b(
    ax: &Axis,
    bx: &Axis,
    bound: usize,
    rotation_pairs: &[(usize, usize)],
    horizon: i64,
) -> Result<(Option<i64>, usize, usize)> {
    let f = ax.alpha.field();
    let ra = rotation_series(ax.cycle(), horizon);
    let rb = rotation_series(bx.cycle(), horizon);
    let line = |cyc: &[Poly], rots: &[Series], j: usize| -> Result<Line> {
        let k = cyc.len();
        let rev: Vec<Poly> = cyc.iter().rev().cloned().collect();
        let rr = rotation_series(&rev, horizon);
        let conj = rr[(k - j) % k].inv(horizon)?.neg();
        Ok(Line::new(BoundaryPoint::Finite(conj), BoundaryPoint::Finite(rots[j].clone())))
    };
    let group = enumerate_group(f, bound);
    let mut best: Option<i64> = None;
    let mut skipped = 0;
    for &(ja, jb) in rotation_pairs {
        let la = line(ax.cycle(), &ra, ja)?;
        let lb = line(bx.cycle(), &rb, jb)?;
        for g in &group {
            let img = match (g.apply_point(&lb.a, horizon), g.apply_point(&lb.b, horizon)) {
                (Ok(a), Ok(b)) => Line::new(a, b),
                _ => {
                    skipped += 1;
                    continue;
                }
            };
            match intersection(&la, &img) {
                Ok(Intersection::Overlap { length: ExtInt::Fin(n), .. }) => best = Some(best.map_or(n, |b| b.max(n))),
                Ok(Intersection::Overlap { .. }) => return Err(Error::OrbitEquivalent),
                Ok(Intersection::Disjoint { distance }) => best = Some(best.map_or(-distance, |b| b.max(-distance))),
                Err(_) => skipped += 1,
            }
        }
    }
    Ok((best, group.len(), skipped))
}

/// `n(α, β)` with its certificate.
pub fn n_alpha_beta(alpha: &QuadraticIrrational, beta: &QuadraticIrrational, budget: &SearchBudget) -> Result<(i64, Certificate)> {
    let ax = axis_of(alpha)?;
    let bx = axis_of(beta)?;
    n_of_axes(&ax, &bx, budget)
}

pub(crate) fn n_of_axes(ax: &Axis, bx: &Axis, budget: &SearchBudget) -> Result<(i64, Certificate)> {
    let res = match engine_a(ax, bx, budget)? {
        EngineAOutcome::Finite(r) => r,
        EngineAOutcome::Equivalent(_) => return Err(Error::OrbitEquivalent),
    };
    let mut cert = Certificate::new(CertKind::Exact, Argument::WordMatchComplete);
    cert.witnesses.push(res.witness.clone());
    cert.steps = res.pairs;
    let hc = super::hall::hall_constants_of_axis(ax);
    cert.evidence = json!({
        "overlap": res.n,
        "same_orientation": res.same_orientation,
        "alpha_rotation": res.alpha_rotation,
        "beta_rotation": res.beta_rotation,
        "local_witness": res.local.to_json(),
        "local_witness_degree": res.local.max_degree(),
        "horizon": res.horizon,
        "stabilizer_ceiling": hc.kappa,
    });
    if budget.engine_b {
        let deg = res.local.max_degree();
        let bound = budget.degree_bound.max(deg);
        let (ka, kb) = (ax.cycle().len(), bx.cycle().len());
        let pairs: Vec<(usize, usize)> = if ka * kb <= 8 && bound <= 1 {
            (0..ka).flat_map(|i| (0..kb).map(move |j| (i, j))).collect()
        } else {
            vec![(res.alpha_rotation, res.beta_rotation)]
        };
        let horizon = 2 * res.n.max(0) + initial_horizon(ax, bx);
        let (best, elements, _) = engine_b(ax, bx, bound, &pairs, horizon)?;
        if best.is_some_and(|b| b > res.n) {
            return Err(Error::Domain(format!("enumeration found overlap {best:?} beyond the complete search {}", res.n)));
        }
        cert.engine_b = Some(EngineBReport { degree_bound: bound, elements, best, covers_witness: bound >= deg });
    }
    Ok((res.n, cert))
}

/// `c_α(x) = q^{-n(α, x)}` for a quadratic target.
pub fn c_alpha_quadratic(alpha: &QuadraticIrrational, x: &QuadraticIrrational, budget: &SearchBudget) -> Result<(ApproxValue, Certificate)> {
    let (n, cert) = n_alpha_beta(alpha, x, budget)?;
    Ok((ApproxValue::Pow(-n), cert))
}

/// As [`c_alpha_quadratic`] for precomputed axes.
pub fn c_alpha_axes(ax: &Axis, bx: &Axis, budget: &SearchBudget) -> Result<(ApproxValue, Certificate)> {
    let (n, cert) = n_of_axes(ax, bx, budget)?;
    Ok((ApproxValue::Pow(-n), cert))
}
