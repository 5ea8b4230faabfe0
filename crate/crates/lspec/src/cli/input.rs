//! Reading numbers, words and fields from command-line arguments.

use std::path::Path;

use serde_json::{json, Value};

use crate::algebra::{parse_poly, Field, Poly, QuadraticIrrational, Series};
use crate::contfrac::{periodic_word_to_quadratic, CfWord};
use crate::error::{Error, Result};
use crate::modgroup::{axis_of, Axis};
use crate::spectrum::preset;

/// A target or base number as given on the command line.
#[derive(Clone, Debug)]
pub struct NumberArg {
    /// Short identifier used in CSV rows.
    pub id: String,
    pub word: Option<CfWord>,
    pub quadratic: Option<QuadraticIrrational>,
    pub series: Option<Series>,
    pub preset: Option<String>,
}

impl NumberArg {
    /// Header record; presets log their expansion.
    pub fn describe(&self) -> Value {
        let mut v = json!({"id": self.id});
        if let Some(p) = &self.preset {
            v["preset"] = json!(p);
        }
        if let Some(w) = &self.word {
            v["word"] = w.to_json();
        } else if let Some(q) = &self.quadratic {
            v["quadratic"] = q.to_json();
        } else if let Some(s) = &self.series {
            v["series"] = s.to_json();
        }
        v
    }

    /// The axis, built from the word when one is known.
    pub fn axis(&self) -> Result<Axis> {
        match (&self.word, &self.quadratic) {
            (Some(w), Some(q)) => Axis::from_word(q, w.clone()),
            (_, Some(q)) => axis_of(q),
            _ => Err(Error::Domain(format!("{} is not a quadratic irrational", self.id))),
        }
    }
}

fn read_text(text: &str) -> Result<String> {
    let path = text.strip_prefix('@').unwrap_or(text);
    if (text.starts_with('@') || path.ends_with(".json")) && Path::new(path).exists() {
        return std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")));
    }
    if text.starts_with('@') {
        return Err(Error::Parse(format!("{path}: no such file")));
    }
    Ok(text.to_string())
}

/// `A,B,C` coefficients of `A x^2 + B x + C`.
pub fn parse_minpoly(field: Field, text: &str) -> Result<(Poly, Poly, Poly)> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!("minimal polynomial needs three coefficients A,B,C, got {text:?}")));
    }
    Ok((parse_poly(field, parts[0])?, parse_poly(field, parts[1])?, parse_poly(field, parts[2])?))
}

/// A series from JSON or a polynomial; a polynomial is only trusted to its
/// integral part.
pub fn parse_series(field: Field, text: &str) -> Result<Series> {
    let text = read_text(text)?;
    let t = text.trim();
    if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("series JSON: {e}")))?;
        return Series::from_json(field, &v);
    }
    Ok(Series::from_poly(&parse_poly(field, t)?).truncate(1))
}

/// Presets, word text `[a0; .., per: ..]`, word JSON (inline or a file),
/// `minpoly:A,B,C@approx`, or a series JSON object with a `coeffs` key.
pub fn parse_number(field: Field, text: &str, size_cap: usize) -> Result<NumberArg> {
    let arg = |id: &str| NumberArg { id: id.to_string(), word: None, quadratic: None, series: None, preset: None };
    if let Some(w) = preset(field, text, size_cap)? {
        let q = if w.is_finite() { None } else { Some(periodic_word_to_quadratic(&w)?) };
        return Ok(NumberArg { word: Some(w), quadratic: q, preset: Some(text.to_string()), ..arg(text) });
    }
    if let Some(rest) = text.strip_prefix("minpoly:") {
        let (mp, approx) = rest.split_once('@').ok_or_else(|| Error::Parse("minpoly spec needs @approx".into()))?;
        let (a, b, c) = parse_minpoly(field, mp)?;
        let q = QuadraticIrrational::new(&a, &b, &c, &parse_series(field, approx)?)?;
        return Ok(NumberArg { quadratic: Some(q), ..arg(text) });
    }
    let body = read_text(text)?;
    let t = body.trim();
    let word = if t.starts_with('[') {
        CfWord::parse(field, t)?
    } else if t.starts_with('{') {
        let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(format!("JSON input: {e}")))?;
        if v.get("coeffs").is_some() {
            return Ok(NumberArg { series: Some(Series::from_json(field, &v)?), ..arg("series") });
        }
        CfWord::from_json(field, &v)?
    } else {
        return Err(Error::Parse(format!("unrecognized number {text:?}: expected a preset, a word or JSON")));
    };
    let q = if word.is_finite() { None } else { Some(periodic_word_to_quadratic(&word)?) };
    Ok(NumberArg { id: word.to_string(), word: Some(word), quadratic: q, ..arg("") })
}

/// Modulus as `t`-polynomial text (`t^2+t+2`) or low-to-high coefficients (`2,1,1`).
pub fn parse_modulus(p: u32, text: &str) -> Result<Vec<u32>> {
    if text.contains('t') {
        let fp = Field::prime(p)?;
        let poly = parse_poly(fp, &text.replace('t', "Y"))?;
        return Ok(poly.coeffs().iter().map(|&c| c as u32).collect());
    }
    text.split(',')
        .map(|c| c.trim().parse::<u32>().map_err(|_| Error::Parse(format!("modulus coefficient {c:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_forms() {
        let f = Field::prime(3).unwrap();
        let g = parse_number(f, "golden", 5000).unwrap();
        assert_eq!(g.word.as_ref().unwrap().to_string(), "[per: Y]");
        let w = parse_number(f, "[0; per: Y^2, Y]", 5000).unwrap();
        assert!(w.quadratic.is_some());
        let j = parse_number(f, r#"{"a0": "0", "preperiod": [], "period": ["Y"]}"#, 5000).unwrap();
        assert_eq!(j.word.unwrap().to_string(), "[0; per: Y]");
        let m = parse_number(f, "minpoly:1,2*Y,2@Y", 5000).unwrap();
        assert!(m.quadratic.unwrap().same_root(g.quadratic.as_ref().unwrap()));
        assert!(matches!(parse_number(f, "nonsense", 5000), Err(Error::Parse(_))));
    }

    #[test]
    fn modulus_forms() {
        assert_eq!(parse_modulus(3, "t^2+1").unwrap(), vec![1, 0, 1]);
        assert_eq!(parse_modulus(3, "1,0,1").unwrap(), vec![1, 0, 1]);
    }
}
