//! Visible vectors, balance, and the cone-switching witness.
//!
//! Indices `i`, `j` here are vertex numbers of the simplex, i.e. `1..=m`,
//! and refer to coordinate `i − 1` of a point.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Point;
use crate::error::{Error, Result};

fn check_index(m: usize, i: usize) -> Result<()> {
    if i == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, min: 1, max: m });
    }
    Ok(())
}

/// `v` is `i`-visible: every coordinate except the `i`-th is nonnegative,
/// the `i`-th is nonpositive and its absolute value dominates the sum of the
/// others. For `i ≥ 1` this is exactly membership in the corner cone `C_i`.
pub fn is_visible(v: &Point, i: usize) -> Result<bool> {
    check_index(v.dim(), i)?;
    let vi = &v.0[i - 1];
    if vi.is_positive() {
        return Ok(false);
    }
    let mut rest = BigInt::zero();
    for (j, x) in v.0.iter().enumerate() {
        if j + 1 == i {
            continue;
        }
        if x.is_negative() {
            return Ok(false);
        }
        rest += x;
    }
    Ok(-vi >= rest)
}

/// The balance `τ(v)`: the sum of the coordinates.
pub fn balance(v: &Point) -> BigInt {
    v.0.iter().sum()
}

/// Witness for moving a lattice vector from `C_i` to `C_j` along a slanted
/// edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchWitness {
    pub gamma: BigInt,
    pub beta: BigInt,
    pub v_tilde: Point,
}

/// Given the slanted edge `c = e_j − e_i` of `C_i`, a lattice vector `l` and
/// `alpha ≥ 0` with `v = l + alpha·c ∈ C_i`, returns `beta ≥ 1` with
/// `l − beta·c ∈ C_j ∖ {0}`.
///
/// `gamma = max(−v_i, alpha) + 1` and `beta = gamma − alpha`.
pub fn switch_cone_witness(c: &Point, l: &Point, alpha: &BigInt, i: usize, j: usize) -> Result<SwitchWitness> {
    let m = c.dim();
    check_index(m, i)?;
    check_index(m, j)?;
    if l.dim() != m {
        return Err(Error::DimensionMismatch { expected: m, found: l.dim() });
    }
    if i == j {
        return Err(Error::Precondition("i and j must differ".into()));
    }
    if c != &(&Point::unit(m, j) - &Point::unit(m, i)) {
        return Err(Error::Precondition(format!("{c} is not e_{j} - e_{i}")));
    }
    if alpha.is_negative() {
        return Err(Error::Precondition("alpha must be nonnegative".into()));
    }
    let v = l + &c.scale(alpha);
    if !is_visible(&v, i)? {
        return Err(Error::Precondition(format!("l + alpha*c = {v} is not in C_{i}")));
    }
    let neg_vi = -&v.0[i - 1];
    let gamma = std::cmp::max(neg_vi, alpha.clone()) + BigInt::one();
    let beta = &gamma - alpha;
    let v_tilde = l - &c.scale(&beta);
    debug_assert!(is_visible(&v_tilde, j).unwrap() && !v_tilde.is_zero());
    Ok(SwitchWitness { gamma, beta, v_tilde })
}
