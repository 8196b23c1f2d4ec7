//! Exact integer and rational linear algebra.

mod hnf;
mod lp;
mod matrix;
mod solve;

pub use hnf::{hnf, hnf_with_transform, integer_kernel, is_hnf, pivots_of, reduce_mod_hnf, solve_in_hnf, HnfDecomposition};
pub(crate) use solve::rref;
pub use lp::{lp_feasible, lp_optimize, LpOutcome, LpProblem, VarSign};
pub use matrix::IntMatrix;
pub use solve::{rational_rank, solve_rational, RationalSolution};

use num_bigint::BigInt;

/// Exact rational number; always stored in lowest terms with a positive
/// denominator.
pub type BigRat = num_rational::BigRational;

pub fn to_rat(x: &BigInt) -> BigRat {
    BigRat::from_integer(x.clone())
}

pub fn to_rat_vec(xs: &[BigInt]) -> Vec<BigRat> {
    xs.iter().map(to_rat).collect()
}
