//! Liminf estimates for targets known only through a prefix of their expansion.

use lspec::algebra::Field;
use lspec::contfrac::CfWord;
use lspec::spectrum::{c_alpha_stream, SearchBudget};
use lspec::cli::verify::word_axis;

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    let phi = word_axis(f, "[per: Y]")?;
    let x = CfWord::parse(f, "[0; per: Y^2, Y, Y+1]")?;
    for horizon in [10, 30, 60] {
        let budget = SearchBudget { stream_horizon: horizon, ..SearchBudget::default() };
        let est = c_alpha_stream(&phi, &x, &budget)?;
        println!("{horizon} coefficients: c in [{}, {}] ({})", est.lower, est.upper, est.certificate.kind.as_str());
    }
    Ok(())
}
