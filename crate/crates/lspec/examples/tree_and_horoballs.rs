//! Vertices of the tree as balls, geodesic lines, and the horoballs a ray crosses.

use lspec::algebra::{Field, Series};
use lspec::btree::{horoball_sequence, intersection, line_vertices, BoundaryPoint, Line, Vertex};
use lspec::contfrac::{periodic_word_to_quadratic, CfWord};

fn main() -> lspec::Result<()> {
    let f = Field::prime(2)?;
    let base = Vertex::base(f);
    println!("base {} has {} neighbours", base.to_json(), base.neighbors().len());
    let v = Vertex::new(&Series::monomial(f, 1, 1), 3)?;
    println!("distance from base to {}: {}", v.to_json(), base.distance(&v));

    let phi = periodic_word_to_quadratic(&CfWord::parse(f, "[per: Y]")?)?;
    let psi = periodic_word_to_quadratic(&CfWord::parse(f, "[per: Y, Y^2]")?)?;
    let (l1, l2) = (Line::of_quadratic(&phi, 60)?, Line::of_quadratic(&psi, 60)?);
    println!("axes of [per: Y] and [per: Y, Y^2]: {:?}", intersection(&l1, &l2)?);
    for x in line_vertices(&l1, -2, 2)? {
        println!("  on the axis: {}", x.to_json());
    }

    let x = BoundaryPoint::Finite(phi.series(40)?);
    for (h, depth) in horoball_sequence(&x, 4)? {
        println!("crosses {} to depth {depth}", h.to_json());
    }
    Ok(())
}
