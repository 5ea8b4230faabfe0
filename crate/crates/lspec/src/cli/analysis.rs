use serde_json::{json, Value};

use crate::btree::BoundaryPoint;
use crate::error::{Error, Result};
use crate::spectrum::{
    c_alpha_axes, c_alpha_stream, c_alpha_stream_coeffs, hall_constants_of_axis, hall_witness, hurwitz_estimate_axis,
    spectrum_sample, stream::stream_coefficients, ApproxValue, CertKind, TargetGenerator,
};

use super::input::{parse_number, NumberArg};
use super::{Outcome, RunConfig, TargetArgs, VALUE_COLUMNS};

fn number(cfg: &RunConfig, text: &str) -> Result<NumberArg> {
    parse_number(cfg.field, text, cfg.budget.size_cap)
}

fn exponent_cell(v: ApproxValue) -> String {
    match v {
        ApproxValue::Pow(e) => e.to_string(),
        ApproxValue::Zero => "zero".into(),
        ApproxValue::Infinity => "inf".into(),
    }
}

fn generator(t: &TargetArgs) -> TargetGenerator {
    TargetGenerator { max_degree: t.max_degree, max_period: t.max_period, max_targets: t.max_targets, structured: true }
}

pub(super) fn constant(cfg: &RunConfig, alpha: &str, x: &str, stream: bool) -> Result<Outcome> {
    let a = number(cfg, alpha)?;
    let t = number(cfg, x)?;
    let inputs = json!({"alpha": a.describe(), "x": t.describe()});
    let ax = a.axis()?;
    if t.word.as_ref().is_some_and(|w| w.is_finite()) {
        return Err(Error::Domain(format!("{} is rational", t.id)));
    }
    if stream || t.series.is_some() {
        let est = match (&t.word, &t.series) {
            (Some(w), _) => c_alpha_stream(&ax, w, &cfg.budget)?,
            (None, Some(s)) => {
                let coeffs = stream_coefficients(&BoundaryPoint::Finite(s.clone()), None, cfg.budget.stream_horizon)?;
                c_alpha_stream_coeffs(&ax, &coeffs, &cfg.budget)?
            }
            _ => return Err(Error::Domain("streaming needs a word or a series".into())),
        };
        let exact = est.is_exact();
        let result = json!({
            "value_exp": if exact { est.lower.to_json() } else { Value::Null },
            "interval": [est.lower.to_json(), est.upper.to_json()],
            "certificate": est.certificate.to_json(),
            "witness": t.word.as_ref().map(|w| w.to_json()),
        });
        let cell = if exact { exponent_cell(est.lower) } else { format!("[{},{}]", exponent_cell(est.lower), exponent_cell(est.upper)) };
        let rows = vec![vec![a.id.clone(), t.id.clone(), cell, est.certificate.kind.as_str().to_string()]];
        return Ok(Outcome { inputs, result, columns: VALUE_COLUMNS.to_vec(), rows, exit: if exact { 0 } else { 3 } });
    }
    let tx = t.axis()?;
    let (v, cert) = c_alpha_axes(&ax, &tx, &cfg.budget)?;
    let result = json!({
        "value_exp": v.to_json(),
        "certificate": cert.to_json(),
        "witness": t.word.as_ref().map(|w| w.to_json()),
    });
    let rows = vec![vec![a.id.clone(), t.id.clone(), exponent_cell(v), cert.kind.as_str().to_string()]];
    Ok(Outcome { inputs, result, columns: VALUE_COLUMNS.to_vec(), rows, exit: 0 })
}

pub(super) fn spectrum(cfg: &RunConfig, alpha: &str, targets: &TargetArgs) -> Result<Outcome> {
    let a = number(cfg, alpha)?;
    let ax = a.axis()?;
    let sample = spectrum_sample(&ax, &generator(targets), &cfg.budget)?;
    let rows = sample
        .values()
        .into_iter()
        .map(|(v, w)| {
            let (x, kind) = match w {
                Some(w) => (w.to_string(), "exact"),
                None => (String::new(), "asserted"),
            };
            vec![a.id.clone(), x, exponent_cell(v), kind.to_string()]
        })
        .collect();
    Ok(Outcome {
        inputs: json!({"alpha": a.describe(), "targets": {"max_degree": targets.max_degree, "max_period": targets.max_period, "max_targets": targets.max_targets}}),
        result: sample.to_json(),
        columns: VALUE_COLUMNS.to_vec(),
        rows,
        exit: 0,
    })
}

pub(super) fn hurwitz(cfg: &RunConfig, alpha: &str, targets: &TargetArgs) -> Result<Outcome> {
    let a = number(cfg, alpha)?;
    let ax = a.axis()?;
    let h = hurwitz_estimate_axis(&ax, &generator(targets), &cfg.budget)?;
    let exact = h.certificate.kind == CertKind::Exact;
    let result = json!({
        "value_exp": h.value.to_json(),
        "upper_exp": h.upper,
        "certificate": h.certificate.to_json(),
        "witness": h.witness.as_ref().map(|w| w.to_json()),
    });
    let x = h.witness.as_ref().map(|w| w.to_string()).unwrap_or_default();
    let rows = vec![vec![a.id.clone(), x, exponent_cell(h.value), h.certificate.kind.as_str().to_string()]];
    Ok(Outcome {
        inputs: json!({"alpha": a.describe()}),
        result,
        columns: VALUE_COLUMNS.to_vec(),
        rows,
        exit: if exact { 0 } else { 3 },
    })
}

pub(super) fn hall(cfg: &RunConfig, alpha: &str, m: Option<i64>, rounds: usize) -> Result<Outcome> {
    let a = number(cfg, alpha)?;
    let ax = a.axis()?;
    let hc = hall_constants_of_axis(&ax);
    let m = m.unwrap_or(hc.m);
    let w = hall_witness(&ax.alpha, m, rounds, &cfg.budget)?;
    let exact = w.certificate.kind == CertKind::Exact;
    let result = json!({
        "constants": {"ell": hc.ell, "k": hc.k, "kappa": hc.kappa, "m": hc.m},
        "m": m,
        "rounds": rounds,
        "prefix": w.prefix.to_json(),
        "hits": w.hits.len(),
        "longest": w.longest,
        "certificate": w.certificate.to_json(),
    });
    let rows = vec![vec![a.id.clone(), "hall-prefix".into(), (-m).to_string(), w.certificate.kind.as_str().to_string()]];
    Ok(Outcome {
        inputs: json!({"alpha": a.describe(), "m": m, "rounds": rounds}),
        result,
        columns: VALUE_COLUMNS.to_vec(),
        rows,
        exit: if exact { 0 } else { 3 },
    })
}
