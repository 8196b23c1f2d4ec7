//! C-finite sequences in closed form over ℚ, exponent lattices, and the
//! search for order-reducing polynomials.

mod ansatz;
mod closed_form;
mod exponent;
mod poly;
mod uncancellable;

pub use ansatz::{reduce_order, reduce_order_with, symbolic_compose, Ansatz, ReductionResult, SymbolicClosedForm, SymbolicTerm};
pub use closed_form::{compose_polynomial, RationalClosedForm, Term};
pub use exponent::{degree_bound_exists, exponent_lattice, uncancellable_term_count};
pub use poly::Poly;
