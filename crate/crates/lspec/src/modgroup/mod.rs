//! The modular group PGL2(F_q[Y]): elements, enumeration, stabilizers, axes
//! and orbits.

pub mod axis;
pub mod element;
pub mod enumerate;
pub mod orbit;
pub mod stabilizer;

pub use crate::algebra::QuadraticIrrational;
pub use axis::{axis_of, Axis, DomainVertex};
pub use element::{median, GroupElement};
pub use enumerate::enumerate_group;
pub use orbit::orbit_points;
pub use stabilizer::{
    ray_stabilizer, ray_stabilizer_order, ray_vertex, reduce_to_ray, stabilizer_order, vertex_stabilizer_order,
    StabilizerCount,
};
