//! Continued fractions of rational functions and their convergents.

use lspec::algebra::{parse_poly, Field, RatFunc, Series};
use lspec::contfrac::{cf_expand_rational, cf_expand_series};

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    let r = RatFunc::new(parse_poly(f, "Y^5 + Y + 1")?, parse_poly(f, "Y^3 + 2*Y")?)?;
    let w = cf_expand_rational(&r);
    println!("(Y^5+Y+1)/(Y^3+2Y) = {w}");
    for c in w.convergents(w.len_finite().unwrap() - 1)? {
        let err = r.sub(&RatFunc::new(c.p.clone(), c.q.clone())?).val();
        println!("  P_{} / Q_{} = ({}) / ({}), v(r - P/Q) = {err:?}", c.n, c.n, c.p, c.q);
    }
    assert_eq!(w.evaluate()?, r);

    // a series known to 20 digits gives as many coefficients as it determines
    let s = Series::from_rational(&r, 20);
    let e = cf_expand_series(&s.truncate(20), 10);
    println!("from 20 digits: {} coefficients, terminated {}", e.coeffs.len(), e.terminated);
    Ok(())
}
