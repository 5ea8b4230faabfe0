use serde_json::{json, Value};

use crate::algebra::{parse_poly, QuadraticIrrational, RatFunc};
use crate::contfrac::{cf_expand_quadratic, cf_expand_rational, periodic_word_to_quadratic, CfWord};
use crate::error::{Error, Result};

use super::input::{parse_minpoly, parse_number, parse_series};
use super::{CfCommand, Outcome, RunConfig};

fn word_rows(w: &CfWord) -> Vec<Vec<String>> {
    let mut rows = vec![vec!["a0".to_string(), "0".to_string(), w.a0().to_string()]];
    for (part, list) in [("preperiod", w.preperiod()), ("period", w.period())] {
        rows.extend(list.iter().enumerate().map(|(i, p)| vec![part.to_string(), i.to_string(), p.to_string()]));
    }
    rows
}

fn word_outcome(inputs: Value, w: &CfWord) -> Outcome {
    let mut result = w.to_json();
    result["text"] = json!(w.to_string());
    Outcome { inputs, result, columns: vec!["part", "index", "coefficient"], rows: word_rows(w), exit: 0 }
}

fn minpoly_rows(q: &QuadraticIrrational) -> Vec<Vec<String>> {
    ["a", "b", "c"]
        .iter()
        .zip([q.a(), q.b(), q.c()])
        .map(|(k, p)| vec!["minpoly".to_string(), k.to_string(), p.to_string()])
        .collect()
}

pub(super) fn run(cfg: &RunConfig, cmd: &CfCommand) -> Result<Outcome> {
    let f = cfg.field;
    match cmd {
        CfCommand::Rational { numerator, denominator } => {
            let r = RatFunc::new(parse_poly(f, numerator)?, parse_poly(f, denominator)?)?;
            let w = cf_expand_rational(&r);
            Ok(word_outcome(json!({"numerator": numerator, "denominator": denominator}), &w))
        }
        CfCommand::Quadratic { minpoly, approx, max_steps } => {
            let (a, b, c) = parse_minpoly(f, minpoly)?;
            let q = QuadraticIrrational::new(&a, &b, &c, &parse_series(f, approx)?)?;
            let w = cf_expand_quadratic(&q, *max_steps)?;
            let mut out = word_outcome(json!({"minpoly": minpoly, "approx": approx}), &w);
            out.result["quadratic"] = q.to_json();
            Ok(out)
        }
        CfCommand::Eval { word } => {
            let arg = parse_number(f, word, cfg.budget.size_cap)?;
            let w = arg.word.clone().ok_or_else(|| Error::Parse("cf eval takes a word".into()))?;
            if w.is_finite() {
                let r = w.evaluate()?;
                let result = json!({"rational": {"num": r.num().to_string(), "den": r.den().to_string()}});
                let rows = vec![
                    vec!["rational".to_string(), "num".to_string(), r.num().to_string()],
                    vec!["rational".to_string(), "den".to_string(), r.den().to_string()],
                ];
                return Ok(Outcome { inputs: arg.describe(), result, columns: vec!["kind", "key", "value"], rows, exit: 0 });
            }
            let q = periodic_word_to_quadratic(&w)?;
            let result = json!({"quadratic": q.to_json()});
            let mut rows = minpoly_rows(&q);
            rows.push(vec!["quadratic".to_string(), "split".to_string(), q.split().to_string()]);
            Ok(Outcome { inputs: arg.describe(), result, columns: vec!["kind", "key", "value"], rows, exit: 0 })
        }
    }
}
