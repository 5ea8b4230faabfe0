//! Values `q^e`, `0` and `+inf` stored by exponent.

use std::fmt;

use serde_json::{json, Value};

/// An element of `q^Z ∪ {0, +inf}`; `Pow(e)` stands for `q^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ApproxValue {
    Zero,
    Pow(i64),
    Infinity,
}

impl ApproxValue {
    pub fn exponent(self) -> Option<i64> {
        match self {
            ApproxValue::Pow(e) => Some(e),
            _ => None,
        }
    }
    pub fn to_json(self) -> Value {
        match self {
            ApproxValue::Zero => json!("zero"),
            ApproxValue::Pow(e) => json!(e),
            ApproxValue::Infinity => json!("inf"),
        }
    }
    pub fn from_json(v: &Value) -> Option<ApproxValue> {
        match v {
            Value::String(s) if s == "zero" => Some(ApproxValue::Zero),
            Value::String(s) if s == "inf" => Some(ApproxValue::Infinity),
            Value::Number(n) => n.as_i64().map(ApproxValue::Pow),
            _ => None,
        }
    }
}

impl fmt::Display for ApproxValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApproxValue::Zero => write!(f, "0"),
            ApproxValue::Pow(e) => write!(f, "q^{e}"),
            ApproxValue::Infinity => write!(f, "inf"),
        }
    }
}
