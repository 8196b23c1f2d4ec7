//! The counting algorithms, the brute-force simplex oracle, and the
//! dimension-bound predicates.

mod bounds;
mod count;
mod oracle;
mod staircase;

pub use bounds::{dimension_bound_guarantee, slanted_lonely_edge, BoundGuarantee};
pub use count::LonelyCount;
pub use oracle::{enumerate_lonely_simplex, enumerate_lonely_simplex_with_limit, lonely_among, DEFAULT_MAX_POINTS};
pub use staircase::{
    has_infinitely_many_lonely_points, infinite_edge, lonely_points_in_cone, number_of_lonely_points,
    number_of_lonely_points_with_limit, run_staircase, ultimate_number_of_lonely_points,
    ultimate_number_of_lonely_points_with_limit, StaircaseRun, StaircaseState, StaircaseStep,
};
