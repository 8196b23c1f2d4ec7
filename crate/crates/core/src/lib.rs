//! Exact computation of lonely lattice points in dilated standard simplices.
//!
//! A point of a set `A` is *lonely* with respect to a lattice `L` if no other
//! integer point of `A` lies in the same residue class modulo `L`. This crate
//! decides, counts and enumerates lonely points of `d·S` (and of the corner
//! cones of `S`), and uses them to study order reduction of C-finite
//! sequences whose exponential bases are rational.
//!
//! All arithmetic is exact: integers are [`num_bigint::BigInt`] and rationals
//! are [`BigRat`]. Nothing in this crate touches floating point.
//!
//! Module map:
//!
//! * [`exactla`]: Hermite normal form, integer kernels, rational solving and
//!   exact LP feasibility.
//! * [`geometry`]: lattices, cones, residue classes, loneliness of single
//!   points and the visibility predicates.
//! * [`lonely`]: the infinite-count test, the staircase counting procedure,
//!   the ultimate count over all corner cones and the brute-force oracle.
//! * [`cfinite`]: closed forms over ℚ, exponent lattices and the ansatz
//!   search for order-reducing polynomials.

pub mod cfinite;
pub mod error;
pub mod exactla;
pub mod geometry;
pub mod lonely;

pub use error::{Error, Result};
pub use exactla::{BigRat, IntMatrix};
