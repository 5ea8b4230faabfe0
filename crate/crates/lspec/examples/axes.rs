//! The axis of a quadratic irrational, one period of it, and its Hall constants.

use lspec::algebra::Field;
use lspec::contfrac::{periodic_word_to_quadratic, CfWord};
use lspec::modgroup::Axis;
use lspec::spectrum::hall_constants_of_axis;

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    for text in ["[per: Y]", "[Y+1; per: Y^2, Y]"] {
        let w = CfWord::parse(f, text)?;
        let ax = Axis::from_word(&periodic_word_to_quadratic(&w)?, w)?;
        println!("{text}: cycle {:?}, translation length {}, γ = {:?}", ax.cycle(), ax.length, ax.gamma);
        for d in ax.fundamental_domain() {
            println!("  crossing {} height {} shift {}", d.crossing, d.h, d.shift);
        }
        let hc = hall_constants_of_axis(&ax);
        println!("  ℓ = {}, k = {}, κ = {}, m = {}", hc.ell, hc.k, hc.kappa, hc.m);
    }
    Ok(())
}
