use num_bigint::BigInt;

use super::Point;
use crate::error::{Error, Result};
use crate::exactla::{hnf, pivots_of, reduce_mod_hnf, solve_in_hnf, IntMatrix};

/// The lattice `⟨ℓ_1, …, ℓ_k⟩ ⊆ ℤ^m` generated by the rows of an integer
/// matrix. The HNF basis is computed once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    generators: IntMatrix,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn new(generators: IntMatrix) -> Self {
        let (basis, _) = hnf(&generators);
        let pivots = pivots_of(&basis);
        Lattice {
            generators,
            basis,
            pivots,
        }
    }

    /// The trivial lattice `{0}` in ℤ^m.
    pub fn trivial(m: usize) -> Self {
        Self::new(IntMatrix::empty(m))
    }

    pub fn from_i64<R: AsRef<[i64]>>(m: usize, generators: &[R]) -> Self {
        Self::new(IntMatrix::from_i64(m, generators))
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators.cols()
    }

    /// Rank of the lattice, i.e. the dimension of the real span.
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    /// HNF basis; its rows are linearly independent.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Point> {
        self.basis.iter_rows().map(|r| Point(r.to_vec())).collect()
    }

    fn check(&self, v: &Point) -> Result<()> {
        if v.dim() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &Point) -> Result<bool> {
        self.check(v)?;
        Ok(solve_in_hnf(&self.basis, &self.pivots, &v.0).is_some())
    }

    /// Coefficients of `v` with respect to the HNF basis, if `v ∈ L`.
    pub fn coefficients(&self, v: &Point) -> Result<Option<Vec<BigInt>>> {
        self.check(v)?;
        Ok(solve_in_hnf(&self.basis, &self.pivots, &v.0))
    }

    /// `u ~ v`, i.e. `u − v ∈ L`.
    pub fn equivalent(&self, u: &Point, v: &Point) -> Result<bool> {
        self.check(u)?;
        self.contains(&(u - v))
    }

    /// Canonical representative of the residue class of `v` modulo `L`:
    /// reduced at every pivot column of the HNF basis into `[0, pivot)`.
    pub fn canonical_rep(&self, v: &Point) -> Result<Point> {
        self.check(v)?;
        Ok(Point(reduce_mod_hnf(&self.basis, &self.pivots, &v.0)))
    }

    /// `Σ α_t · b_t` over the HNF basis rows.
    pub fn combination(&self, alpha: &[BigInt]) -> Point {
        Point(self.basis.left_mul(alpha))
    }
}
