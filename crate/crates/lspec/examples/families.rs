//! The generated families and their degree statistics.

use lspec::algebra::Field;
use lspec::contfrac::CfWord;
use lspec::spectrum::{contains_all_blocks, family_e, family_f, m2_witness};

fn main() -> lspec::Result<()> {
    for q in [2, 3] {
        let f = Field::prime(q)?;
        let e = family_e(f, 2, 2, 5000)?;
        let s = e.stats()?;
        println!("q={q} E(2,2): period {}, M {}, m {}, M2 {}, all 2-blocks {}", e.period().len(), s.max_deg, s.min_deg, s.max_pair, contains_all_blocks(&e, 2, 2));
        let w = family_f(f, 2, 5000)?;
        println!("q={q} F2: period {}", w.period().len());
    }
    let f = Field::prime(3)?;
    let alpha = CfWord::parse(f, "[per: Y^2+1, Y^3]")?;
    println!("a target realising M2 for {alpha}: {}", m2_witness(&alpha)?);
    Ok(())
}
