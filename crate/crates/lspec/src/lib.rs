//! Continued fractions over F_q((1/Y)), geodesics in the Bruhat-Tits tree of
//! PGL2, and approximation constants of Laurent series by orbits of quadratic
//! irrationals under PGL2(F_q[Y]).

pub mod algebra;
pub mod btree;
pub mod cli;
pub mod contfrac;
pub mod error;
pub mod modgroup;
pub mod spectrum;

pub use error::{Error, Result};
