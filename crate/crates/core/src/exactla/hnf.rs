//! Row-style Hermite normal form over ℤ.
//!
//! Convention: the nonzero rows come first, each pivot (leading nonzero
//! entry) is positive, pivot columns strictly increase downwards, and every
//! entry above a pivot lies in `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Result of [`hnf_with_transform`]: `transform · input = reduced`, with
/// `transform` unimodular.
#[derive(Debug, Clone)]
pub struct HnfDecomposition {
    /// All rows, including the trailing zero rows.
    pub reduced: IntMatrix,
    pub transform: IntMatrix,
    pub rank: usize,
    /// Pivot column of each of the first `rank` rows.
    pub pivots: Vec<usize>,
}

/// HNF basis of the row span of `m` together with its rank.
///
/// Only the nonzero rows are returned.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, usize) {
    let dec = hnf_with_transform(m);
    let rows = dec.reduced.iter_rows().take(dec.rank).map(|r| r.to_vec()).collect();
    let h = IntMatrix::from_rows(m.cols(), rows).expect("hnf shape");
    (h, dec.rank)
}

// row_a <- x*row_a + y*row_b ; row_b <- u*row_a + v*row_b
fn combine(rows: &mut IntMatrix, a: usize, b: usize, x: &BigInt, y: &BigInt, u: &BigInt, v: &BigInt) {
    for j in 0..rows.cols() {
        let ra = rows[(a, j)].clone();
        let rb = rows[(b, j)].clone();
        rows[(a, j)] = x * &ra + y * &rb;
        rows[(b, j)] = u * &ra + v * &rb;
    }
}

fn sub_multiple(rows: &mut IntMatrix, target: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for j in 0..rows.cols() {
        let s = rows[(src, j)].clone();
        rows[(target, j)] -= q * s;
    }
}

fn negate_row(rows: &mut IntMatrix, i: usize) {
    for x in rows.row_mut(i) {
        *x = -&*x;
    }
}

pub fn hnf_with_transform(m: &IntMatrix) -> HnfDecomposition {
    let k = m.rows();
    let mut h = m.clone();
    let mut u = IntMatrix::identity(k);
    let mut r = 0;
    let mut pivots = Vec::new();

    for col in 0..m.cols() {
        if r == k {
            break;
        }
        for i in (r + 1)..k {
            if h[(i, col)].is_zero() {
                continue;
            }
            let a = h[(r, col)].clone();
            let b = h[(i, col)].clone();
            let eg = a.extended_gcd(&b);
            let g = eg.gcd;
            // [x y; -b/g a/g] has determinant 1
            let nb = -(&b / &g);
            let na = &a / &g;
            combine(&mut h, r, i, &eg.x, &eg.y, &nb, &na);
            combine(&mut u, r, i, &eg.x, &eg.y, &nb, &na);
        }
        if h[(r, col)].is_zero() {
            continue;
        }
        if h[(r, col)].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        let pivot = h[(r, col)].clone();
        for t in 0..r {
            let q = h[(t, col)].div_floor(&pivot);
            sub_multiple(&mut h, t, r, &q);
            sub_multiple(&mut u, t, r, &q);
        }
        pivots.push(col);
        r += 1;
    }

    HnfDecomposition {
        reduced: h,
        transform: u,
        rank: r,
        pivots,
    }
}

/// Basis (in HNF) of the left integer kernel `{x ∈ ℤ^k : x·M = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let dec = hnf_with_transform(m);
    let rows: Vec<Vec<BigInt>> = dec
        .transform
        .iter_rows()
        .skip(dec.rank)
        .map(|r| r.to_vec())
        .collect();
    let basis = IntMatrix::from_rows(m.rows(), rows).expect("kernel shape");
    hnf(&basis).0
}

/// Whether `m` already satisfies the HNF convention (zero rows disallowed).
pub fn is_hnf(m: &IntMatrix) -> bool {
    let mut last_pivot: Option<usize> = None;
    for i in 0..m.rows() {
        let row = m.row(i);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if last_pivot.is_some_and(|lp| p <= lp) || !row[p].is_positive() {
            return false;
        }
        for t in 0..i {
            let e = &m[(t, p)];
            if e.is_negative() || e >= &row[p] {
                return false;
            }
        }
        last_pivot = Some(p);
    }
    true
}

/// Reduces `v` modulo the lattice spanned by the HNF rows `h`.
///
/// Each pivot coordinate of the result lies in `[0, pivot)`, which makes the
/// result a canonical representative of the residue class of `v`.
pub fn reduce_mod_hnf(h: &IntMatrix, pivots: &[usize], v: &[BigInt]) -> Vec<BigInt> {
    let mut out = v.to_vec();
    for (t, &p) in pivots.iter().enumerate() {
        let row = h.row(t);
        let q = out[p].div_floor(&row[p]);
        if !q.is_zero() {
            for (o, a) in out.iter_mut().zip(row) {
                *o -= &q * a;
            }
        }
    }
    out
}

/// Integer coefficients `α` with `α·h = v`, if `v` lies in the row lattice of
/// the HNF `h`.
pub fn solve_in_hnf(h: &IntMatrix, pivots: &[usize], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coeffs = Vec::with_capacity(pivots.len());
    for (t, &p) in pivots.iter().enumerate() {
        let row = h.row(t);
        let (q, rem) = rest[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for (o, a) in rest.iter_mut().zip(row) {
                *o -= &q * a;
            }
        }
        coeffs.push(q);
    }
    rest.iter().all(Zero::is_zero).then_some(coeffs)
}

/// Pivot column of each row of a matrix in Hermite normal form.
pub fn pivots_of(h: &IntMatrix) -> Vec<usize> {
    h.iter_rows()
        .map(|r| r.iter().position(|x| !x.is_zero()).expect("zero row in hnf"))
        .collect()
}
