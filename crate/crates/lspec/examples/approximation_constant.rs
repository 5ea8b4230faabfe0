//! `c_α(x)` for two quadratic irrationals, with its certificate.

use lspec::algebra::{Field, Poly};
use lspec::contfrac::periodic_word_to_quadratic;
use lspec::spectrum::{c_alpha_quadratic, golden_witnesses, SearchBudget};

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    let y = Poly::y(f);
    let phi = periodic_word_to_quadratic(&lspec::contfrac::CfWord::purely_periodic(std::slice::from_ref(&y))?)?;
    let budget = SearchBudget::default();
    for m in 0..3 {
        let (fm, fm2) = golden_witnesses(&y, m)?;
        for w in [fm, fm2] {
            let (v, cert) = c_alpha_quadratic(&phi, &periodic_word_to_quadratic(&w)?, &budget)?;
            println!("c(golden, {w}) = {v} [{}], witness {:?}", cert.kind.as_str(), cert.witnesses.first());
        }
    }
    Ok(())
}
