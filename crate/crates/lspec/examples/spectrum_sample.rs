//! A sample of the spectrum of one α over a battery of periodic targets.

use lspec::algebra::Field;
use lspec::contfrac::periodic_word_to_quadratic;
use lspec::modgroup::Axis;
use lspec::spectrum::{family_f, spectrum_sample, SearchBudget, TargetGenerator};

fn main() -> lspec::Result<()> {
    let f = Field::prime(2)?;
    let w = family_f(f, 2, 5000)?;
    println!("F2 over F_2 has period length {}", w.period().len());
    let ax = Axis::from_word(&periodic_word_to_quadratic(&w)?, w)?;
    let generator = TargetGenerator { max_targets: 100, ..TargetGenerator::default() };
    let s = spectrum_sample(&ax, &generator, &SearchBudget::default())?;
    println!("{} targets evaluated", s.points.len());
    for (v, witness) in s.values() {
        println!("  {v}: {}", witness.map(|w| w.to_string()).unwrap_or_default());
    }
    Ok(())
}
