//! Verification suites: each row pairs an expected exponent with the computed one.

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{Field, Poly, QuadraticIrrational, Series};
use crate::btree::oracle::{c_by_intersection, c_by_vertex_walk};
use crate::btree::{c_of, BoundaryPoint};
use crate::contfrac::{periodic_word_to_quadratic, CfWord};
use crate::error::Result;
use crate::modgroup::Axis;
use crate::spectrum::{
    c_alpha_axes, family_e, family_f, golden_witnesses, hall_constants_of_axis, hall_witness, hurwitz_estimate_axis,
    spectrum_sample, ApproxValue, CertKind, TargetGenerator,
};

use super::{Outcome, RunConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Golden,
    HurwitzSmallPeriod,
    Families,
    Gaps,
    Hallray,
    Oracles,
}

#[derive(Clone, Debug)]
pub struct Row {
    pub alpha_id: String,
    pub x_id: String,
    pub expected: String,
    pub computed: String,
    pub kind: String,
    pub ok: bool,
    pub note: Value,
}

/// Ten purely periodic or eventually periodic words with all period
/// coefficients of degree at least 2.
pub const SMALL_PERIOD_ALPHAS: [&str; 10] = [
    "[per: Y^2]",
    "[per: Y^2+1]",
    "[per: Y^2, Y^3]",
    "[per: Y^2+1, Y^3]",
    "[per: Y^2+Y, Y^2+1]",
    "[Y; per: Y^3+Y]",
    "[per: Y^2+Y+1, Y^4]",
    "[0; Y, per: Y^2, Y^2+Y]",
    "[per: Y^3, Y^2+1, Y^2]",
    "[per: Y^2, Y^2+1, Y^3+Y, Y^2+Y]",
];

/// Pairs `(α, x)` with every period coefficient of `x` of degree above `M(α)`.
pub const M2_PAIRS: [(&str, &str); 10] = [
    ("[per: Y]", "[per: Y^2]"),
    ("[per: Y, Y+1]", "[per: Y^2+1]"),
    ("[per: Y^2]", "[per: Y^3]"),
    ("[per: Y, Y^2]", "[per: Y^3, Y^4]"),
    ("[per: Y^2+1, Y^3]", "[per: Y^4]"),
    ("[per: Y^3]", "[per: Y^4+1]"),
    ("[Y; per: Y, Y^2, Y]", "[per: Y^3+Y]"),
    ("[per: Y^2, Y]", "[per: Y^5]"),
    ("[per: Y^3, Y]", "[per: Y^4, Y^5]"),
    ("[per: Y^2, Y^2+1, Y]", "[per: Y^3+1]"),
];

pub fn word_axis(f: Field, text: &str) -> Result<Axis> {
    let w = CfWord::parse(f, text)?;
    let q = periodic_word_to_quadratic(&w)?;
    Axis::from_word(&q, w)
}

fn cell(v: ApproxValue) -> String {
    match v {
        ApproxValue::Pow(e) => e.to_string(),
        ApproxValue::Zero => "zero".into(),
        ApproxValue::Infinity => "inf".into(),
    }
}

fn golden(cfg: &RunConfig, mmax: usize) -> Result<Vec<Row>> {
    let f = cfg.field;
    let phi = word_axis(f, "[per: Y]")?;
    let mut rows = Vec::new();
    let mut check = |w: CfWord, expected: i64| -> Result<()> {
        let q = periodic_word_to_quadratic(&w)?;
        let tx = Axis::from_word(&q, w.clone())?;
        let (v, cert) = c_alpha_axes(&phi, &tx, &cfg.budget)?;
        let b = cert.engine_b.as_ref();
        let agree = b.is_none_or(|b| !b.covers_witness || b.best == Some(expected.abs()));
        rows.push(Row {
            alpha_id: "golden".into(),
            x_id: w.to_string(),
            expected: expected.to_string(),
            computed: cell(v),
            kind: cert.kind.as_str().into(),
            ok: v == ApproxValue::Pow(expected) && cert.kind == CertKind::Exact && agree,
            note: json!({"engine_b": b.map(|b| b.to_json())}),
        });
        Ok(())
    };
    let y = Poly::y(f);
    for m in 0..=mmax {
        let (fm, fm2) = golden_witnesses(&y, m)?;
        check(fm, -2 * m as i64 - 2)?;
        if m < mmax {
            check(fm2, -2 * m as i64 - 3)?;
        }
    }
    Ok(rows)
}

/// Whether `w` is `[P̄]` with `deg P = 1`.
pub fn is_degree_one_cycle(w: &CfWord) -> bool {
    w.is_purely_periodic() && w.period().len() == 1 && w.period()[0].deg() == 1
}

fn hurwitz_small(cfg: &RunConfig) -> Result<Vec<Row>> {
    let mut rows = Vec::new();
    for a in SMALL_PERIOD_ALPHAS {
        let ax = word_axis(cfg.field, a)?;
        let h = hurwitz_estimate_axis(&ax, &TargetGenerator::default(), &cfg.budget)?;
        let wit_ok = h.witness.as_ref().is_some_and(is_degree_one_cycle);
        rows.push(Row {
            alpha_id: a.into(),
            x_id: h.witness.as_ref().map(|w| w.to_string()).unwrap_or_default(),
            expected: "-2".into(),
            computed: cell(h.value),
            kind: h.certificate.kind.as_str().into(),
            ok: h.value == ApproxValue::Pow(-2) && h.certificate.kind == CertKind::Exact && wit_ok,
            note: h.certificate.evidence.clone(),
        });
    }
    Ok(rows)
}

fn families(cfg: &RunConfig) -> Result<Vec<Row>> {
    let f = cfg.field;
    let mut rows = Vec::new();
    let e = family_e(f, 2, 2, cfg.budget.size_cap)?;
    let q = periodic_word_to_quadratic(&e)?;
    let ax = Axis::from_word(&q, e)?;
    for p in ["Y^3", "Y^3+1", "Y^3+Y"] {
        let x = format!("[per: {p}]");
        let tx = word_axis(f, &x)?;
        let (v, cert) = c_alpha_axes(&ax, &tx, &cfg.budget)?;
        rows.push(Row {
            alpha_id: "E22".into(),
            x_id: x,
            expected: "-4".into(),
            computed: cell(v),
            kind: cert.kind.as_str().into(),
            ok: v == ApproxValue::Pow(-4) && cert.kind == CertKind::Exact,
            note: json!({"engine_b": cert.engine_b.map(|b| b.to_json())}),
        });
    }
    let h = hurwitz_estimate_axis(&ax, &TargetGenerator::default(), &cfg.budget)?;
    rows.push(Row {
        alpha_id: "E22".into(),
        x_id: "hurwitz".into(),
        expected: "-4".into(),
        computed: cell(h.value),
        kind: h.certificate.kind.as_str().into(),
        ok: h.value == ApproxValue::Pow(-4) && h.certificate.kind == CertKind::Exact,
        note: h.certificate.evidence.clone(),
    });
    for (a, x) in M2_PAIRS {
        let ax = word_axis(f, a)?;
        let tx = word_axis(f, x)?;
        let m2 = ax.word.stats()?.max_pair as i64;
        let (v, cert) = c_alpha_axes(&ax, &tx, &cfg.budget)?;
        rows.push(Row {
            alpha_id: a.into(),
            x_id: x.into(),
            expected: (-m2).to_string(),
            computed: cell(v),
            kind: cert.kind.as_str().into(),
            ok: v == ApproxValue::Pow(-m2) && cert.kind == CertKind::Exact,
            note: Value::Null,
        });
    }
    Ok(rows)
}

/// The target battery used for gap checks.
pub fn gap_battery() -> TargetGenerator {
    TargetGenerator { max_degree: 2, max_period: 2, max_targets: 200, structured: true }
}

fn gaps(cfg: &RunConfig, k: usize) -> Result<Vec<Row>> {
    let w = family_f(cfg.field, k, cfg.budget.size_cap)?;
    let q = periodic_word_to_quadratic(&w)?;
    let ax = Axis::from_word(&q, w)?;
    let s = spectrum_sample(&ax, &gap_battery(), &cfg.budget)?;
    let id = format!("F{k}");
    let k = k as i64;
    let vals = s.values();
    let gap = ApproxValue::Pow(-2 * k + 1);
    let small: Vec<i64> = vals.keys().filter_map(|v| v.exponent()).filter(|&e| e <= -2 * k).collect();
    let over: Vec<i64> = vals.keys().filter_map(|v| v.exponent()).filter(|&e| e > -2).collect();
    let listed: Vec<String> = vals.keys().map(|v| cell(*v)).collect();
    let mk = |x: &str, expected: String, computed: String, ok: bool| Row {
        alpha_id: id.clone(),
        x_id: x.into(),
        expected,
        computed,
        kind: "exact".into(),
        ok,
        note: json!({"values": listed, "evaluated": s.points.len(), "failures": s.failures.len()}),
    };
    Ok(vec![
        mk("gap", format!("absent {}", -2 * k + 1), if s.contains(gap) { "present".into() } else { "absent".into() }, !s.contains(gap)),
        mk("max", "present -2".into(), if s.contains(ApproxValue::Pow(-2)) { "present".into() } else { "absent".into() }, s.contains(ApproxValue::Pow(-2))),
        mk("tail", format!(">=3 values <= {}", -2 * k), format!("{small:?}"), small.len() >= 3),
        mk("ceiling", "none above -2".into(), format!("{over:?}"), over.is_empty() && s.failures.is_empty()),
    ])
}

fn hallray(cfg: &RunConfig, rounds: usize) -> Result<Vec<Row>> {
    let phi = word_axis(cfg.field, "[per: Y]")?;
    let hc = hall_constants_of_axis(&phi);
    let mut rows = Vec::new();
    for m in [hc.m, hc.m + 1] {
        let w = hall_witness(&phi.alpha, m, rounds, &cfg.budget)?;
        rows.push(Row {
            alpha_id: "golden".into(),
            x_id: format!("hall m={m}"),
            expected: format!("longest <= {m}, >= 2 hits"),
            computed: format!("longest {}, {} hits", w.longest, w.hits.len()),
            kind: w.certificate.kind.as_str().into(),
            ok: w.longest <= m && w.hits.len() >= 2,
            note: json!({"ell": hc.ell, "k": hc.k, "kappa": hc.kappa, "m_alpha": hc.m, "prefix": w.prefix.to_string()}),
        });
    }
    Ok(rows)
}

fn random_poly(f: Field, rng: &mut ChaCha8Rng, degrees: std::ops::Range<usize>) -> Poly {
    let q = f.q() as u16;
    let deg = rng.gen_range(degrees);
    let mut c: Vec<u16> = (0..deg).map(|_| rng.gen_range(0..q)).collect();
    c.push(rng.gen_range(1..q));
    Poly::from_coeffs(f, c)
}

/// A random eventually periodic quadratic irrational.
pub fn random_quadratic(f: Field, rng: &mut ChaCha8Rng) -> Result<QuadraticIrrational> {
    let a0 = if rng.gen_bool(0.3) { Poly::zero(f) } else { random_poly(f, rng, 0..3) };
    let pre = (0..rng.gen_range(0..3)).map(|_| random_poly(f, rng, 1..3)).collect();
    let per = (0..rng.gen_range(1..4)).map(|_| random_poly(f, rng, 1..3)).collect();
    periodic_word_to_quadratic(&CfWord::new(a0, pre, per)?)
}

/// A point near `β` (mode 0), near `β^σ` (mode 1) or anywhere (mode 2),
/// known to `len` digits.
pub fn random_target(f: Field, beta: &QuadraticIrrational, rng: &mut ChaCha8Rng, len: i64) -> Result<Series> {
    let q = f.q() as u16;
    let mode = rng.gen_range(0..3);
    if mode == 2 {
        let start = rng.gen_range(-3..4);
        let digits = (0..len).map(|_| rng.gen_range(0..q)).collect();
        return Ok(Series::from_digits(f, start, digits, start + len));
    }
    let base = if mode == 0 { beta.clone() } else { beta.conjugate() };
    let start = base.approx().start().min(0);
    let s = base.series(start + len)?;
    let j = start + rng.gen_range(0..len - 8);
    let digits = (0..len)
        .map(|i| {
            let idx = start + i;
            let d = s.digit(idx).unwrap_or(0);
            match idx.cmp(&j) {
                std::cmp::Ordering::Less => d,
                std::cmp::Ordering::Equal => (d + rng.gen_range(1..q)) % q,
                std::cmp::Ordering::Greater => rng.gen_range(0..q),
            }
        })
        .collect();
    Ok(Series::from_digits(f, start, digits, start + len))
}

fn oracles(cfg: &RunConfig, trials: usize) -> Result<Vec<Row>> {
    let f = cfg.field;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut disagreements = Vec::new();
    let mut tally = std::collections::BTreeMap::new();
    for t in 0..trials {
        let beta = random_quadratic(f, &mut rng)?;
        let x = random_target(f, &beta, &mut rng, 40)?;
        let h = beta.split().max(0) + 80;
        let a = c_of(&BoundaryPoint::Finite(x.clone()), &beta);
        let b = c_by_intersection(&x, &beta, h);
        let c = c_by_vertex_walk(&x, &beta, h);
        match (&a, &b, &c) {
            (Ok(a), Ok(b), Ok(c)) if a == b && b == c => *tally.entry(cell(*a)).or_insert(0usize) += 1,
            _ => disagreements.push(json!({"trial": t, "c_of": format!("{a:?}"), "intersection": format!("{b:?}"), "walk": format!("{c:?}")})),
        }
    }
    Ok(vec![Row {
        alpha_id: "random".into(),
        x_id: format!("{trials} trials"),
        expected: "0 disagreements".into(),
        computed: format!("{} disagreements", disagreements.len()),
        kind: "exact".into(),
        ok: disagreements.is_empty(),
        note: json!({"values": tally, "disagreements": disagreements.iter().take(10).collect::<Vec<_>>()}),
    }])
}

pub fn suite_rows(cfg: &RunConfig, suite: Suite, mmax: usize, k: usize, trials: usize) -> Result<Vec<Row>> {
    match suite {
        Suite::Golden => golden(cfg, mmax),
        Suite::HurwitzSmallPeriod => hurwitz_small(cfg),
        Suite::Families => families(cfg),
        Suite::Gaps => gaps(cfg, k),
        Suite::Hallray => hallray(cfg, 4),
        Suite::Oracles => oracles(cfg, trials),
    }
}

pub(super) fn run(cfg: &RunConfig, suite: Suite, mmax: usize, k: usize, trials: usize) -> Result<Outcome> {
    let rows = suite_rows(cfg, suite, mmax, k, trials)?;
    let passed = rows.iter().all(|r| r.ok);
    let name = suite.to_possible_value().expect("named suite").get_name().to_string();
    let result = json!({
        "suite": name,
        "passed": passed,
        "rows": rows.iter().map(|r| json!({
            "alpha_id": r.alpha_id, "x_id": r.x_id, "expected": r.expected, "computed": r.computed,
            "certificate_kind": r.kind, "ok": r.ok, "note": r.note,
        })).collect::<Vec<_>>(),
    });
    let table = rows
        .iter()
        .map(|r| vec![r.alpha_id.clone(), r.x_id.clone(), r.computed.clone(), r.kind.clone(), r.expected.clone(), r.ok.to_string()])
        .collect();
    Ok(Outcome {
        inputs: json!({"suite": name, "mmax": mmax, "k": k, "trials": trials}),
        result,
        columns: vec!["alpha_id", "x_id", "exponent", "certificate_kind", "expected", "ok"],
        rows: table,
        exit: if passed { 0 } else { 1 },
    })
}
