//! Constants of the Hall-ray argument and the greedy witness construction.

use serde_json::json;

use crate::algebra::{Poly, QuadraticIrrational};
use crate::contfrac::CfWord;
use crate::error::{Error, Result};
use crate::modgroup::{axis_of, Axis};

use super::certificate::{Argument, CertKind, Certificate, SearchBudget};
use super::stream::{scan_ray, RaySegment};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HallConstants {
    /// Translation length of `γ_α`.
    pub ell: i64,
    /// Least stabilizer order along the axis.
    pub k: u64,
    /// `(k + 1) ℓ - 2`.
    pub kappa: i64,
    /// `2 κ + 1`.
    pub m: i64,
}

pub fn hall_constants(alpha: &QuadraticIrrational) -> Result<HallConstants> {
    Ok(hall_constants_of_axis(&axis_of(alpha)?))
}

pub fn hall_constants_of_axis(ax: &Axis) -> HallConstants {
    let ell = ax.length;
    let k = ax.min_stabilizer_order();
    let kappa = (k as i64 + 1) * ell - 2;
    HallConstants { ell, k, kappa, m: 2 * kappa + 1 }
}

/// A prefix `[0; a_1, .., a_N]` on which translates of `Ax_α` meet the ray in
/// at most `m` edges, `m` being reached once per round.
#[derive(Clone, Debug)]
pub struct HallWitness {
    pub prefix: CfWord,
    /// Segments of length exactly `m`.
    pub hits: Vec<RaySegment>,
    /// Longest overlap on the prefix, truncated ones included.
    pub longest: i64,
    pub certificate: Certificate,
}

fn separator(deg: usize, round: usize, f: crate::algebra::Field) -> Poly {
    // distinct separators keep the prefix from repeating
    let q = f.q() as usize;
    let mut c = vec![0u16; deg + 1];
    c[deg] = 1;
    c[0] = f.from_int((round % q) as i64);
    if round / q > 0 && deg >= 2 {
        c[1] = f.from_int(((round / q) % q) as i64);
    }
    Poly::from_coeffs(f, c)
}

/// Exit variants for the coefficient following a run: unchanged, a changed
/// constant term, a scaled copy, or none at all.
fn exits(next: &Poly) -> Vec<Option<Poly>> {
    let f = next.field();
    let mut out = vec![None, Some(next.clone())];
    for u in f.units() {
        out.push(Some(next.add(&Poly::constant(f, u))));
    }
    for u in f.units().skip(1) {
        out.push(Some(next.scale(u)));
    }
    out
}

/// Greedy construction over `rounds` rounds. Round `r` appends a separator of
/// degree `M(α) + 1`, a run of the period of `α` and an exit coefficient,
/// choosing the first run length and exit, in a fixed order, whose window
/// has a common segment of length exactly `m` and none longer.
pub fn hall_witness(alpha: &QuadraticIrrational, m: i64, rounds: usize, budget: &SearchBudget) -> Result<HallWitness> {
    let ax = axis_of(alpha)?;
    let hc = hall_constants_of_axis(&ax);
    if m < hc.m {
        return Err(Error::Precondition(format!("m = {m} is below m_α = {}", hc.m)));
    }
    let f = alpha.field();
    let cycle = ax.cycle().to_vec();
    let big = cycle.iter().map(Poly::deg).max().unwrap() + 1;
    let mut coeffs = vec![Poly::zero(f)];
    let mut steps = 0u64;
    let cyc_len: i64 = cycle.iter().map(|c| 2 * c.deg() as i64).sum();
    for r in 0..rounds {
        let sep = separator(big, r, f);
        let next_sep = separator(big, r + 1, f);
        let approx = (m / 2) * cycle.len() as i64 / (cyc_len / 2).max(1);
        let lo = (approx - 2 * cycle.len() as i64 - 2).max(0) as usize;
        let hi = (approx + 2 * cycle.len() as i64 + 2) as usize;
        let mut chosen = None;
        'search: for len in lo..=hi {
            let run: Vec<Poly> = (0..len).map(|i| cycle[i % cycle.len()].clone()).collect();
            for e in exits(&cycle[len % cycle.len()]) {
                steps += 1;
                if steps > budget.max_steps {
                    return Err(Error::BudgetExceeded { steps: steps as usize, partial: coeffs });
                }
                let mut block = vec![sep.clone()];
                block.extend(run.iter().cloned());
                block.extend(e.iter().cloned());
                let mut window = vec![Poly::zero(f)];
                window.extend(block.iter().cloned());
                window.push(next_sep.clone());
                let scan = scan_ray(&ax, &window)?;
                let inner: Vec<&RaySegment> = scan.segments.iter().filter(|s| !s.truncated).collect();
                let longest = inner.iter().map(|s| s.len()).max().unwrap_or(0);
                if longest == m && scan.segments.iter().all(|s| s.len() <= m) {
                    chosen = Some(block);
                    break 'search;
                }
            }
        }
        let block = chosen.ok_or(Error::BudgetExceeded { steps: steps as usize, partial: coeffs.clone() })?;
        coeffs.extend(block);
    }
    coeffs.push(separator(big, rounds, f));

    let scan = scan_ray(&ax, &coeffs)?;
    let longest = scan.segments.iter().map(|s| s.len()).max().unwrap_or(0);
    let hits: Vec<RaySegment> = scan.segments.iter().filter(|s| s.len() == m && !s.truncated).cloned().collect();
    let ok = longest <= m && hits.len() >= rounds.div_ceil(2);
    let mut cert = Certificate::new(
        if ok { CertKind::Exact } else { CertKind::LowerBound },
        if ok { Argument::WordMatchComplete } else { Argument::BudgetExhausted },
    );
    cert.witnesses = hits.iter().map(|s| s.witness.clone()).collect();
    cert.steps = steps;
    cert.evidence = json!({
        "m": m,
        "m_alpha": hc.m,
        "kappa": hc.kappa,
        "k": hc.k,
        "ell": hc.ell,
        "rounds": rounds,
        "longest_overlap": longest,
        "segments": scan.segments.len(),
        "hits": hits.iter().map(|s| json!([s.start, s.end])).collect::<Vec<_>>(),
    });
    let prefix = CfWord::finite(coeffs[0].clone(), coeffs[1..].to_vec())?;
    Ok(HallWitness { prefix, hits, longest, certificate: cert })
}
