//! Finite samples of the spectrum and the Hurwitz constant.

use std::collections::{BTreeMap, HashSet};

use serde_json::{json, Value};

use crate::algebra::{Field, Poly, QuadraticIrrational};
use crate::contfrac::{cycle_class_key, periodic_word_to_quadratic, CfWord};
use crate::error::{Error, Result};
use crate::modgroup::{axis_of, Axis};

use super::certificate::{Argument, CertKind, Certificate, SearchBudget};
use super::engine::c_alpha_axes;
use super::families::{contains_all_blocks, golden_witnesses, m2_witness, polys_in_degree_range};
use super::value::ApproxValue;

/// Deterministic battery of purely periodic targets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetGenerator {
    /// Largest coefficient degree of enumerated cycles.
    pub max_degree: usize,
    /// Largest period length of enumerated cycles.
    pub max_period: usize,
    /// Cap on enumerated (non-structured) targets.
    pub max_targets: usize,
    /// Prepend `[P̄]` for `deg P <= 3`, the golden witnesses and the `M2` witness.
    pub structured: bool,
}

impl Default for TargetGenerator {
    fn default() -> Self {
        TargetGenerator { max_degree: 2, max_period: 2, max_targets: 64, structured: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub word: CfWord,
    pub origin: &'static str,
}

fn word_key(w: &CfWord) -> Vec<Poly> {
    cycle_class_key(w.tail_cycle())
}

/// Odometer step; false once every index has wrapped.
fn advance(idx: &mut [usize], n: usize) -> bool {
    for j in (0..idx.len()).rev() {
        idx[j] += 1;
        if idx[j] < n {
            return true;
        }
        idx[j] = 0;
    }
    false
}

impl TargetGenerator {
    /// Targets in a fixed order, one per cycle class, skipping the class of `alpha`.
    pub fn targets(&self, field: Field, alpha: Option<&CfWord>) -> Result<Vec<Target>> {
        let mut seen: HashSet<Vec<Poly>> = HashSet::new();
        if let Some(a) = alpha {
            seen.insert(word_key(a));
        }
        let mut out = Vec::new();
        let mut push = |w: CfWord, origin: &'static str, out: &mut Vec<Target>| {
            if seen.insert(word_key(&w)) {
                out.push(Target { word: w, origin });
            }
        };
        if self.structured {
            for d in 1..=3 {
                for p in Poly::all_of_degree(field, d) {
                    push(CfWord::purely_periodic(&[p])?, "constant-cycle", &mut out);
                }
            }
            let y = Poly::y(field);
            for m in 0..=3 {
                let (fm, fm2) = golden_witnesses(&y, m)?;
                push(fm, "golden", &mut out);
                push(fm2, "golden-prime", &mut out);
            }
            if let Some(a) = alpha {
                push(m2_witness(a)?, "m2-witness", &mut out);
            }
        }
        let polys = polys_in_degree_range(field, 1, self.max_degree);
        let structured = out.len();
        'outer: for len in 1..=self.max_period {
            let mut idx = vec![0usize; len];
            loop {
                if out.len() - structured >= self.max_targets {
                    break 'outer;
                }
                let cyc: Vec<Poly> = idx.iter().map(|&i| polys[i].clone()).collect();
                push(CfWord::purely_periodic(&cyc)?, "enumerated", &mut out);
                if !advance(&mut idx, polys.len()) {
                    break;
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct SamplePoint {
    pub target: Target,
    pub value: ApproxValue,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, Default)]
pub struct SpectrumSample {
    /// Every exactly certified evaluation, in generator order.
    pub points: Vec<SamplePoint>,
    /// Targets found to lie in `Θ_α`.
    pub theta_equivalent: Vec<CfWord>,
    /// Targets whose evaluation failed or was not exact.
    pub failures: Vec<(CfWord, String)>,
}

impl SpectrumSample {
    /// Distinct values with their first witness; `0` is included without one.
    pub fn values(&self) -> BTreeMap<ApproxValue, Option<&CfWord>> {
        let mut out = BTreeMap::new();
        out.insert(ApproxValue::Zero, None);
        for p in &self.points {
            out.entry(p.value).or_insert(Some(&p.target.word));
        }
        out
    }

    pub fn contains(&self, v: ApproxValue) -> bool {
        v == ApproxValue::Zero || self.points.iter().any(|p| p.value == v)
    }

    pub fn max(&self) -> Option<&SamplePoint> {
        self.points.iter().fold(None, |best: Option<&SamplePoint>, p| match best {
            Some(b) if b.value >= p.value => Some(b),
            _ => Some(p),
        })
    }

    /// Sorted by exponent, `0` first and tagged as asserted.
    pub fn to_json(&self) -> Value {
        let values: Vec<Value> = self
            .values()
            .into_iter()
            .map(|(v, w)| match w {
                None => json!({"value_exp": v.to_json(), "certificate": Certificate::asserted().to_json(), "witness": null}),
                Some(w) => json!({"value_exp": v.to_json(), "certificate": {"kind": "exact"}, "witness": w.to_json()}),
            })
            .collect();
        json!({
            "values": values,
            "evaluated": self.points.len(),
            "theta_equivalent": self.theta_equivalent.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "failures": self.failures.iter().map(|(w, e)| json!({"target": w.to_string(), "error": e})).collect::<Vec<_>>(),
        })
    }
}

/// Evaluates `c_α` on the given targets.
pub fn spectrum_sample_targets(ax: &Axis, targets: &[Target], budget: &SearchBudget) -> SpectrumSample {
    let mut out = SpectrumSample::default();
    for t in targets {
        let res = periodic_word_to_quadratic(&t.word)
            .and_then(|x| Axis::from_word(&x, t.word.clone()))
            .and_then(|tx| c_alpha_axes(ax, &tx, budget));
        match res {
            Ok((value, certificate)) if certificate.kind == CertKind::Exact => {
                out.points.push(SamplePoint { target: t.clone(), value, certificate })
            }
            Ok((_, c)) => out.failures.push((t.word.clone(), format!("inexact ({})", c.kind.as_str()))),
            Err(Error::OrbitEquivalent) => out.theta_equivalent.push(t.word.clone()),
            Err(e) => out.failures.push((t.word.clone(), e.to_string())),
        }
    }
    out
}

/// Samples the spectrum of the number with axis `ax`.
pub fn spectrum_sample(ax: &Axis, generator: &TargetGenerator, budget: &SearchBudget) -> Result<SpectrumSample> {
    let targets = generator.targets(ax.alpha.field(), Some(&ax.word))?;
    Ok(spectrum_sample_targets(ax, &targets, budget))
}

#[derive(Clone, Debug)]
pub struct HurwitzEstimate {
    pub value: ApproxValue,
    pub certificate: Certificate,
    /// Exponent of the proven ceiling.
    pub upper: i64,
    pub witness: Option<CfWord>,
    pub sample: SpectrumSample,
}

/// Largest `m >= 2` for which every length-`m` block of coefficients of
/// degree `1..=M` occurs in the period.
fn all_blocks_depth(w: &CfWord, big: usize) -> Option<usize> {
    if big < 2 {
        return None;
    }
    let mut m = None;
    for mm in 2.. {
        if !contains_all_blocks(w, mm, big) {
            break;
        }
        m = Some(mm);
    }
    m
}

/// `max Sp(α)` from a sample, bounded above by `q^{-2}` and, for periods
/// containing every block, by `q^{-min(2m, M+2)}`.
pub fn hurwitz_estimate_axis(ax: &Axis, generator: &TargetGenerator, budget: &SearchBudget) -> Result<HurwitzEstimate> {
    let word = &ax.word;
    let st = word.stats()?;
    let q = ax.alpha.field().q() as usize;
    let deg1 = word.period().iter().filter(|p| p.deg() == 1).count();
    let few_deg1 = deg1 + 2 <= q;
    let small_big = st.max_deg == 1;
    let large_small = st.min_deg >= 2;
    let blocks = all_blocks_depth(word, st.max_deg);
    let upper = match blocks {
        Some(m) => -((2 * m).min(st.max_deg + 2) as i64),
        None => -2,
    };
    let sample = spectrum_sample(ax, generator, budget)?;
    let best = sample.max();
    let lower = best.and_then(|p| p.value.exponent());
    let mut cert;
    let value;
    let witness = best.map(|p| p.target.word.clone());
    match lower {
        Some(l) if l > upper => {
            return Err(Error::Domain(format!("sampled value q^{l} exceeds the proven ceiling q^{upper}")));
        }
        Some(l) if l == upper => {
            cert = Certificate::new(CertKind::Exact, Argument::WordMatchComplete);
            value = ApproxValue::Pow(upper);
        }
        Some(l) => {
            cert = Certificate::new(CertKind::LowerBound, Argument::BudgetExhausted);
            value = ApproxValue::Pow(l);
        }
        None => {
            cert = Certificate::new(CertKind::UpperBound, Argument::BudgetExhausted);
            value = ApproxValue::Pow(upper);
        }
    }
    if let Some(p) = best {
        cert.witnesses = p.certificate.witnesses.clone();
    }
    cert.steps = sample.points.iter().map(|p| p.certificate.steps).sum();
    cert.evidence = json!({
        "lower": lower,
        "upper": upper,
        "upper_source": if blocks.is_some() { "all-blocks" } else { "ceiling" },
        "block_depth": blocks,
        "m2": st.max_pair,
        "max_deg": st.max_deg,
        "min_deg": st.min_deg,
        "degree_one_in_period": deg1,
        "hypotheses": {
            "few_degree_one": few_deg1,
            "max_deg_one": small_big,
            "min_deg_two": large_small,
        },
        "witness": witness.as_ref().map(|w| w.to_string()),
        "evaluated": sample.points.len(),
    });
    Ok(HurwitzEstimate { value, certificate: cert, upper, witness, sample })
}

/// [`hurwitz_estimate_axis`] with the default generator.
pub fn hurwitz_estimate(alpha: &QuadraticIrrational, budget: &SearchBudget) -> Result<HurwitzEstimate> {
    let ax = axis_of(alpha)?;
    hurwitz_estimate_axis(&ax, &TargetGenerator::default(), budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_dedups_classes() {
        let f = Field::prime(3).unwrap();
        let g = TargetGenerator { max_degree: 1, max_period: 2, max_targets: 1000, structured: false };
        let ts = g.targets(f, None).unwrap();
        let keys: HashSet<_> = ts.iter().map(|t| word_key(&t.word)).collect();
        assert_eq!(keys.len(), ts.len());
        // Y ~ 2Y, and Y+1 ~ 2Y+2; pairs likewise collapse under twists
        assert!(ts.len() < 6 + 36);
        assert!(ts.iter().all(|t| t.origin == "enumerated"));
    }

    #[test]
    fn structured_targets_lead() {
        let f = Field::prime(2).unwrap();
        let phi = CfWord::parse(f, "[per: Y]").unwrap();
        let ts = TargetGenerator::default().targets(f, Some(&phi)).unwrap();
        assert!(ts.iter().all(|t| word_key(&t.word) != word_key(&phi)));
        assert_eq!(ts[0].word.to_string(), "[per: Y+1]");
    }
}
