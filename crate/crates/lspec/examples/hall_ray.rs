//! A prefix on which every translate of the golden axis meets the ray in at most `m` edges.

use lspec::algebra::Field;
use lspec::cli::verify::word_axis;
use lspec::spectrum::{hall_constants_of_axis, hall_witness, SearchBudget};

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    let phi = word_axis(f, "[per: Y]")?;
    let hc = hall_constants_of_axis(&phi);
    println!("m_α = {}", hc.m);
    let w = hall_witness(&phi.alpha, hc.m + 2, 3, &SearchBudget::default())?;
    println!("prefix {}", w.prefix);
    println!("longest overlap {}, hits at {:?}", w.longest, w.hits.iter().map(|s| (s.start, s.end)).collect::<Vec<_>>());
    Ok(())
}
