//! The modular group acting on points and vertices, and vertex stabilizers.

use lspec::algebra::{parse_poly, Field, RatFunc, Series};
use lspec::btree::Vertex;
use lspec::modgroup::{enumerate_group, reduce_to_ray, stabilizer_order, vertex_stabilizer_order, GroupElement};

fn main() -> lspec::Result<()> {
    let f = Field::prime(3)?;
    let g = GroupElement::new(parse_poly(f, "Y")?, parse_poly(f, "1")?, parse_poly(f, "1")?, parse_poly(f, "0")?)?;
    let x = RatFunc::new(parse_poly(f, "1")?, parse_poly(f, "Y^2")?)?;
    println!("g = {g:?}, det {}, g(1/Y^2) = {:?}", g.det(), g.apply_rational(Some(&x)));
    println!("g g^-1 = {:?}", g.mul(&g.inverse()));

    println!("elements of entry degree <= 1: {}", enumerate_group(f, 1).len());
    let base = Vertex::base(f);
    println!("|Stab(base)| = {} (enumeration {:?})", stabilizer_order(&base), vertex_stabilizer_order(&base, 0));

    let v = Vertex::new(&Series::from_rational(&x, 6), 4)?;
    let (h, m) = reduce_to_ray(&v);
    println!("{} = M . u_{h} with M = {m:?}; stabilizer order {}", v.to_json(), stabilizer_order(&v));
    Ok(())
}
