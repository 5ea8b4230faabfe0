//! Continued fractions in F_q((Y^{-1})): the Artin map, expansions, convergents,
//! degree statistics and orbit equivalence of periodic words.

pub mod equiv;
pub mod expand;
pub mod word;

pub use expand::{
    artin_map, cf_expand_quadratic, cf_expand_rational, cf_expand_series, cycle_quadratic, cycle_triple,
    periodic_word_to_quadratic, rotation_series, shift_reciprocal, SeriesExpansion,
};
pub use equiv::{cycle_class_key, gamma_equivalent, EquivPath, Equivalence};
pub use word::{CfStats, CfWord, Convergent};
