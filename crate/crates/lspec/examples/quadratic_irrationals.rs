//! Periodic words, the quadratic irrationals they expand, and back.

use lspec::algebra::{parse_poly, Field, QuadraticIrrational, Series};
use lspec::contfrac::{cf_expand_quadratic, periodic_word_to_quadratic, CfWord};

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    for text in ["[per: Y]", "[Y; per: Y^2, Y+1]", "[0; Y, per: 2*Y^2+1]"] {
        let w = CfWord::parse(f, text)?;
        let alpha = periodic_word_to_quadratic(&w)?;
        let (a, b, c) = alpha.triple();
        println!("{w}: ({a}) x^2 + ({b}) x + ({c}), v(α - α^σ) = {}", alpha.split());
        println!("  conjugate expands to {}", cf_expand_quadratic(&alpha.conjugate(), 1000)?);
        assert_eq!(cf_expand_quadratic(&alpha, 1000)?, w);
    }

    // a root picked out by an approximation: x^2 - Y x - 1 near Y
    let one = parse_poly(f, "1")?;
    let root = QuadraticIrrational::new(&one, &parse_poly(f, "2*Y")?, &parse_poly(f, "2")?, &Series::from_poly(&parse_poly(f, "Y")?))?;
    println!("root near Y: {:?}", root.series(10)?);
    println!("expansion: {}", cf_expand_quadratic(&root, 100)?);
    Ok(())
}
