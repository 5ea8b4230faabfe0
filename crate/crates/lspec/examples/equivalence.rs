//! Deciding whether two periodic words lie in one orbit.

use lspec::algebra::Field;
use lspec::contfrac::{cycle_class_key, gamma_equivalent, CfWord};
use lspec::spectrum::SearchBudget;

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    let budget = SearchBudget::default();
    let pairs = [("[per: Y]", "[Y+1; Y^2, per: Y]"), ("[per: Y]", "[per: 2*Y]"), ("[per: Y, Y^2]", "[per: Y^2, Y]"), ("[per: Y]", "[per: Y^2]")];
    for (a, b) in pairs {
        let (x, y) = (CfWord::parse(f, a)?, CfWord::parse(f, b)?);
        println!("{a} vs {b}: {}", gamma_equivalent(&x, &y, 2, &budget)?.to_json());
    }
    let w = CfWord::parse(f, "[per: Y+1, 2*Y^2, Y]")?;
    println!("class key of {w}: {:?}", cycle_class_key(w.period()));
    Ok(())
}
