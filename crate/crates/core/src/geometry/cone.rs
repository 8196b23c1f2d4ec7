use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Point;
use crate::error::{Error, Result};
use crate::exactla::{to_rat, BigRat, IntMatrix};

/// The discrete cone `[c_1, …, c_n] ⊆ ℤ^m` of nonnegative integer
/// combinations of linearly independent integer generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cone {
    generators: IntMatrix,
    // β = coord_map · v for v in the span of the generators
    coord_map: Vec<Vec<BigRat>>,
    // v lies in the span iff span_check · v = 0
    span_check: Vec<Vec<BigRat>>,
}

impl Cone {
    pub fn new(generators: IntMatrix) -> Result<Self> {
        for (i, g) in generators.iter_rows().enumerate() {
            if g.iter().all(Zero::is_zero) {
                return Err(Error::ZeroGenerator(i));
            }
        }
        let m = generators.cols();
        let n = generators.rows();
        // Row reduce [Gᵀ | I_m]. The first n rows then express β in terms of
        // v, the remaining ones are the span equations.
        let mut aug: Vec<Vec<BigRat>> = (0..m)
            .map(|r| {
                let mut row: Vec<BigRat> = (0..n).map(|j| to_rat(&generators[(j, r)])).collect();
                row.extend((0..m).map(|k| if k == r { BigRat::one() } else { BigRat::zero() }));
                row
            })
            .collect();
        let pivots = crate::exactla::rref(&mut aug, n);
        if pivots.len() != n {
            return Err(Error::DependentGenerators);
        }
        let coord_map = aug[..n].iter().map(|r| r[n..].to_vec()).collect();
        let span_check = aug[n..].iter().map(|r| r[n..].to_vec()).collect();
        Ok(Cone {
            generators,
            coord_map,
            span_check,
        })
    }

    pub fn from_i64<R: AsRef<[i64]>>(m: usize, generators: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_i64(m, generators))
    }

    /// The corner cone `C_i = [e_0 − e_i, …, e_m − e_i]` of the standard
    /// simplex, for `i` in `0..=m`, with the zero vector `e_i − e_i` dropped.
    ///
    /// For `i > 0` the generators are `−e_i` followed by `e_j − e_i` for
    /// `j = 1..=m`, `j ≠ i`.
    pub fn corner(m: usize, i: usize) -> Result<Self> {
        if i > m {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 0,
                max: m,
            });
        }
        let gens: Vec<Vec<BigInt>> = (0..=m)
            .filter(|&j| j != i)
            .map(|j| (&Point::unit(m, j) - &Point::unit(m, i)).0)
            .collect();
        Self::new(IntMatrix::from_rows(m, gens)?)
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators.cols()
    }

    pub fn num_generators(&self) -> usize {
        self.generators.rows()
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> Point {
        Point(self.generators.row(i).to_vec())
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: n,
            });
        }
        Ok(())
    }

    pub(crate) fn check_edge(&self, i: usize) -> Result<()> {
        if i >= self.num_generators() {
            return Err(Error::IndexOutOfRange {
                index: i,
                min: 0,
                max: self.num_generators().saturating_sub(1),
            });
        }
        Ok(())
    }

    /// The unique `β` with `Σ β_j c_j = v`, or `None` if `v` is outside the
    /// linear span of the generators.
    pub fn coordinates(&self, v: &[BigRat]) -> Result<Option<Vec<BigRat>>> {
        self.check_dim(v.len())?;
        let apply = |row: &Vec<BigRat>| -> BigRat {
            row.iter()
                .zip(v)
                .filter(|(a, x)| !a.is_zero() && !x.is_zero())
                .map(|(a, x)| a * x)
                .fold(BigRat::zero(), |s, t| s + t)
        };
        if self.span_check.iter().any(|r| !apply(r).is_zero()) {
            return Ok(None);
        }
        Ok(Some(self.coord_map.iter().map(apply).collect()))
    }

    /// Membership of a rational vector in the real cone spanned by the
    /// generators: some `β ≥ 0` with `Σ β_j c_j = v`.
    pub fn contains(&self, v: &[BigRat]) -> Result<bool> {
        Ok(self
            .coordinates(v)?
            .is_some_and(|b| b.iter().all(|x| !x.is_negative())))
    }

    /// Membership of an integer point in the discrete cone: its coordinates
    /// must be nonnegative integers.
    pub fn contains_point(&self, v: &Point) -> Result<bool> {
        Ok(self.point_coordinates(v)?.is_some())
    }

    /// Nonnegative integer coordinates of `v`, if `v` is in the discrete cone.
    pub fn point_coordinates(&self, v: &Point) -> Result<Option<Vec<BigInt>>> {
        let Some(beta) = self.coordinates(&v.to_rational())? else {
            return Ok(None);
        };
        if beta.iter().any(|b| b.is_negative() || !b.is_integer()) {
            return Ok(None);
        }
        Ok(Some(beta.into_iter().map(|b| b.to_integer()).collect()))
    }

    /// `Σ β_j c_j`.
    pub fn point_at(&self, beta: &[BigInt]) -> Point {
        Point(self.generators.left_mul(beta))
    }
}
