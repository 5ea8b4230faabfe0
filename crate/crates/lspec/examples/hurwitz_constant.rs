//! The largest value of the spectrum, with its ceiling and witness.

use lspec::algebra::Field;
use lspec::cli::verify::word_axis;
use lspec::spectrum::{hurwitz_estimate_axis, SearchBudget, TargetGenerator};

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    for text in ["[per: Y]", "[per: Y^2, Y^3]", "[per: Y, Y^2]"] {
        let ax = word_axis(f, text)?;
        let h = hurwitz_estimate_axis(&ax, &TargetGenerator::default(), &SearchBudget::default())?;
        println!(
            "{text}: {} [{}], ceiling q^{}, witness {}",
            h.value,
            h.certificate.kind.as_str(),
            h.upper,
            h.witness.map(|w| w.to_string()).unwrap_or_default()
        );
    }
    Ok(())
}
