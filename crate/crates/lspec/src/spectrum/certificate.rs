//! Certificates attached to computed values, and search budgets.

use serde_json::{json, Value};

use crate::modgroup::GroupElement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CertKind {
    Exact,
    LowerBound,
    UpperBound,
    Interval,
}

impl CertKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertKind::Exact => "exact",
            CertKind::LowerBound => "lower-bound",
            CertKind::UpperBound => "upper-bound",
            CertKind::Interval => "interval",
        }
    }
}

/// Why nothing better exists within the stated scope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Argument {
    /// Every pairing of fundamental-domain vertices and stabilizer elements was scored.
    WordMatchComplete,
    /// Overlaps longer than the stabilizer bound force a common axis.
    StabilizerBound,
    BudgetExhausted,
    /// Taken from the literature rather than computed.
    Asserted,
}

impl Argument {
    pub fn as_str(self) -> &'static str {
        match self {
            Argument::WordMatchComplete => "word-match-complete",
            Argument::StabilizerBound => "stabilizer-bound",
            Argument::BudgetExhausted => "budget-exhausted",
            Argument::Asserted => "asserted",
        }
    }
}

/// Result of the bounded enumeration cross-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineBReport {
    pub degree_bound: usize,
    pub elements: usize,
    /// Best overlap found, `None` when nothing was scored.
    pub best: Option<i64>,
    /// Whether the bound reaches the degree of the word-matching witness.
    pub covers_witness: bool,
}

impl EngineBReport {
    pub fn to_json(&self) -> Value {
        json!({
            "degree_bound": self.degree_bound,
            "elements": self.elements,
            "best": self.best,
            "covers_witness": self.covers_witness,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertKind,
    pub argument: Argument,
    pub witnesses: Vec<GroupElement>,
    /// Free-form evidence (intersection reports, bounds, recurrence counts).
    pub evidence: Value,
    pub steps: u64,
    pub engine_b: Option<EngineBReport>,
}

impl Certificate {
    pub fn new(kind: CertKind, argument: Argument) -> Certificate {
        Certificate { kind, argument, witnesses: Vec::new(), evidence: json!({}), steps: 0, engine_b: None }
    }
    pub fn asserted() -> Certificate {
        Certificate::new(CertKind::Exact, Argument::Asserted)
    }
    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "kind": self.kind.as_str(),
            "argument": self.argument.as_str(),
            "witnesses": self.witnesses.iter().map(GroupElement::to_json).collect::<Vec<_>>(),
            "evidence": self.evidence,
            "steps": self.steps,
        });
        if let Some(b) = &self.engine_b {
            v["engine_b"] = b.to_json();
        }
        v
    }
}

/// Limits for the searches.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Entry-degree bound for enumeration (Engine B, orbit scans).
    pub degree_bound: usize,
    /// Lower bound on `v(β - β^σ)` for orbit points.
    pub splitting_floor: i64,
    /// CF coefficients of a streamed target that are examined.
    pub stream_horizon: usize,
    /// Leading coefficients of a stream ignored by the liminf estimate.
    pub warmup: usize,
    /// Disjoint occurrences needed before a recurring overlap counts.
    pub recurrence_threshold: usize,
    /// Cap on scored candidate pairs.
    pub max_steps: u64,
    /// Largest series horizon the engines may request.
    pub max_horizon: i64,
    /// Largest period accepted from a generated family.
    pub size_cap: usize,
    /// Whether to run the enumeration cross-check.
    pub engine_b: bool,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            degree_bound: 1,
            splitting_floor: i64::MIN,
            stream_horizon: 48,
            warmup: 8,
            recurrence_threshold: 3,
            max_steps: 50_000_000,
            max_horizon: 4096,
            size_cap: 5000,
            engine_b: true,
        }
    }
}
