use crate::algebra::Poly;

/// Errors raised by the library. Precision shortfalls are recoverable:
/// callers usually refine the offending series and retry.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("insufficient precision: {0}")]
    InsufficientPrecision(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("root not isolated by the approximation")]
    RootNotIsolated,
    #[error("not a root: residual does not shrink")]
    NotARoot,
    #[error("not quadratic over K")]
    NotQuadratic,
    #[error("budget exceeded after {steps} steps")]
    BudgetExceeded { steps: usize, partial: Vec<Poly> },
    #[error("inputs are orbit-equivalent")]
    OrbitEquivalent,
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precision(msg: impl Into<String>) -> Error {
    Error::InsufficientPrecision(msg.into())
}
