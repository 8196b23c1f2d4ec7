//! Lattices, cones, simplices and loneliness of single points.

mod cone;
mod lattice;
mod loneliness;
mod point;
mod simplex;
mod visibility;

pub use cone::Cone;
pub use lattice::Lattice;
pub use loneliness::{
    edge_lonely_condition, edge_witness, is_lonely_in_cone, is_lonely_in_cone_with_limit,
    lattice_cone_trivial, lattice_cone_witness, DEFAULT_MAX_BOX,
};
pub(crate) use loneliness::partner_in_cone;
pub use point::Point;
pub use simplex::DilatedSimplex;
pub use visibility::{balance, is_visible, switch_cone_witness, SwitchWitness};
