//! Finite fields, polynomials over them, and Laurent series in `Y^{-1}`.

use lspec::algebra::{parse_poly, Field, RatFunc, Series};

fn main() -> lspec::Result<()> {
    // F_9 = F_3[t]/(t^2 + 1)
    let f = Field::new(3, 2, Some(vec![1, 0, 1]))?;
    let t = f.from_coords(&[0, 1]);
    println!("q = {}, t^2 = {}, 1/t = {}", f.q(), f.format_elem(f.mul(t, t)), f.format_elem(f.inv(t)));

    let g = Field::prime(3)?;
    let a = parse_poly(g, "Y^4 + 2*Y + 1")?;
    let b = parse_poly(g, "Y^2 + 1")?;
    let (quo, rem) = a.div_rem(&b);
    println!("({a}) = ({b})({quo}) + {rem}");
    let (d, s, u) = a.ext_gcd(&b);
    println!("gcd = {d} = ({s})a + ({u})b");

    // 1/(Y - 1) = Y^{-1} + Y^{-2} + ...
    let r = RatFunc::new(parse_poly(g, "1")?, parse_poly(g, "Y+2")?)?;
    let s = Series::from_rational(&r, 8);
    println!("1/(Y-1) = {s:?}, valuation {}", s.val_fin()?);
    println!("times (Y-1): {:?}", s.mul(&Series::from_poly(&parse_poly(g, "Y+2")?)));
    Ok(())
}
