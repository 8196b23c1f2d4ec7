use num_traits::{One, Zero};

use super::BigRat;

/// One solution of `A·x = b` together with a basis of the kernel of `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSolution {
    pub particular: Vec<BigRat>,
    pub nullspace: Vec<Vec<BigRat>>,
}

/// Reduced row echelon form of `a`, in place. Returns the pivot columns.
pub(crate) fn rref(a: &mut [Vec<BigRat>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..a.len() {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (src, dst) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Solves `A·x = b` exactly. `a` is given as rows; every row must have the
/// same length, which is the number of unknowns (`ncols`).
///
/// Returns `None` when the system is inconsistent.
pub fn solve_rational(a: &[Vec<BigRat>], b: &[BigRat], ncols: usize) -> Option<RationalSolution> {
    assert_eq!(a.len(), b.len(), "row count of A and length of b differ");
    let mut aug: Vec<Vec<BigRat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            assert_eq!(row.len(), ncols, "ragged rational matrix");
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }

    let mut particular = vec![BigRat::zero(); ncols];
    for (r, &p) in pivots.iter().enumerate() {
        particular[p] = aug[r][ncols].clone();
    }

    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let nullspace = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![BigRat::zero(); ncols];
            v[f] = BigRat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -aug[r][f].clone();
            }
            v
        })
        .collect();

    Some(RationalSolution {
        particular,
        nullspace,
    })
}

/// Rank of a rational matrix.
pub fn rational_rank(a: &[Vec<BigRat>], ncols: usize) -> usize {
    let mut m = a.to_vec();
    rref(&mut m, ncols).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRat {
        BigRat::from_integer(x.into())
    }

    fn rows(r: &[&[i64]]) -> Vec<Vec<BigRat>> {
        r.iter().map(|row| row.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn identity_system() {
        let s = solve_rational(&rows(&[&[1, 0], &[0, 1]]), &[q(1), q(2)], 2).unwrap();
        assert_eq!(s.particular, vec![q(1), q(2)]);
        assert!(s.nullspace.is_empty());
    }

    #[test]
    fn underdetermined_system() {
        let s = solve_rational(&rows(&[&[1, 1]]), &[q(0)], 2).unwrap();
        assert_eq!(s.particular, vec![q(0), q(0)]);
        assert_eq!(s.nullspace.len(), 1);
        // spans ⟨(1,-1)⟩
        let v = &s.nullspace[0];
        assert_eq!(&v[0] + &v[1], q(0));
        assert_ne!(v[0], q(0));
    }

    #[test]
    fn inconsistent_system() {
        assert!(solve_rational(&rows(&[&[1], &[1]]), &[q(1), q(2)], 1).is_none());
    }

    #[test]
    fn zero_columns() {
        let s = solve_rational(&[vec![], vec![]], &[q(0), q(0)], 0).unwrap();
        assert!(s.particular.is_empty());
        assert!(solve_rational(&[vec![]], &[q(1)], 0).is_none());
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rational_rank(&rows(&[&[1, 2], &[2, 4], &[0, 0]]), 2), 1);
    }
}
