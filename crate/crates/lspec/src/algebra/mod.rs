//! Exact arithmetic: finite fields, polynomials, rational functions, Laurent
//! series in `Y^{-1}` and quadratic irrationals.

pub mod field;
pub mod poly;
pub mod quadratic;
pub mod ratfunc;
pub mod series;
pub mod text;

pub use field::{Field, FieldContext, FqElem};
pub use poly::{Degree, Poly};
pub use quadratic::{mobius_triple, normalize_triple, refine_quadratic_root, QuadraticIrrational};
pub use ratfunc::RatFunc;
pub use series::{DiffVal, Series, Source, EXACT};
pub use text::{format_poly, parse_elem, parse_poly};

/// An integer extended by both infinities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Fin(i64),
    PosInf,
}

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Fin(v) => Some(v),
            _ => None,
        }
    }
}

/// Laurent expansion of a rational function, exact below `horizon`.
pub fn series_of_rational(f: &RatFunc, horizon: i64) -> Series {
    Series::from_rational(f, horizon)
}
