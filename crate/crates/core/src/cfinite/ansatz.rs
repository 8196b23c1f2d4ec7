//! The ansatz search for polynomials `q` that lower the recurrence order of
//! `(q(a_n))_n`.

use num_traits::{One, Zero};

use super::{compose_polynomial, Poly, RationalClosedForm, Term};
use crate::exactla::{solve_rational, BigRat};

/// A term `ψ^n · Σ_k n^k · (Σ_j c_{k,j} q_j)`; `coeffs[k][j] = c_{k,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicTerm {
    pub base: BigRat,
    pub coeffs: Vec<Vec<BigRat>>,
}

/// `q(a_n)` for `q = q_0 + q_1 x + ⋯ + q_d x^d` with the `q_j` unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicClosedForm {
    pub degree: usize,
    /// Sorted by base, bases pairwise distinct.
    pub terms: Vec<SymbolicTerm>,
}

impl SymbolicClosedForm {
    /// Substitutes concrete values for the unknowns.
    pub fn specialize(&self, q: &Poly) -> RationalClosedForm {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                base: t.base.clone(),
                poly: Poly::new(
                    t.coeffs
                        .iter()
                        .map(|row| row.iter().enumerate().map(|(j, c)| c * q.coeff(j)).sum())
                        .collect(),
                ),
            })
            .collect();
        RationalClosedForm::new(terms)
            .expect("products of nonzero bases are nonzero")
            .normalize()
    }
}

pub fn symbolic_compose(cf: &RationalClosedForm, d: usize) -> SymbolicClosedForm {
    let powers = cf.powers(d);
    let mut terms: Vec<SymbolicTerm> = Vec::new();
    for (j, aj) in powers.iter().enumerate() {
        for t in aj.terms() {
            let pos = match terms.binary_search_by(|s| s.base.cmp(&t.base)) {
                Ok(p) => p,
                Err(p) => {
                    terms.insert(
                        p,
                        SymbolicTerm {
                            base: t.base.clone(),
                            coeffs: Vec::new(),
                        },
                    );
                    p
                }
            };
            let slot = &mut terms[pos].coeffs;
            for (k, c) in t.poly.coeffs().iter().enumerate() {
                while slot.len() <= k {
                    slot.push(vec![BigRat::zero(); d + 1]);
                }
                slot[k][j] += c;
            }
        }
    }
    SymbolicClosedForm { degree: d, terms }
}

/// Which solutions of the linear systems are tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ansatz {
    /// `q_d = 1`: only polynomials of exact degree `d`.
    #[default]
    Monic,
    /// Any nonconstant `q` of degree at most `d`.
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReductionResult {
    Found { q: Poly, order: usize },
    NotFound,
}

impl ReductionResult {
    pub fn q(&self) -> Option<&Poly> {
        match self {
            ReductionResult::Found { q, .. } => Some(q),
            ReductionResult::NotFound => None,
        }
    }

    pub fn order(&self) -> Option<usize> {
        match self {
            ReductionResult::Found { order, .. } => Some(*order),
            ReductionResult::NotFound => None,
        }
    }
}

/// Searches for a monic `q` of degree `d` with `ord q(a_n) < ord a_n`.
pub fn reduce_order(cf: &RationalClosedForm, d: usize) -> ReductionResult {
    reduce_order_with(cf, d, Ansatz::Monic)
}

/// For every set of `r − 1` surviving bases (in lexicographic order of
/// their indices), forces all other coefficients to vanish and tries the
/// solutions of the resulting system. Every candidate is checked by
/// recomputing the order of `q(a_n)`.
pub fn reduce_order_with(cf: &RationalClosedForm, d: usize, ansatz: Ansatz) -> ReductionResult {
    let cf = cf.normalize();
    let r = cf.minimal_order();
    if d == 0 || r == 0 {
        return ReductionResult::NotFound;
    }
    let sym = symbolic_compose(&cf, d);
    let ell = sym.terms.len();
    let keep = r - 1;
    if keep > ell {
        return ReductionResult::NotFound;
    }
    let nvars = d + 1;
    for complement in Combinations::new(ell, keep) {
        let mut rows: Vec<Vec<BigRat>> = Vec::new();
        let mut ci = 0;
        for (i, t) in sym.terms.iter().enumerate() {
            if ci < complement.len() && complement[ci] == i {
                ci += 1;
                continue;
            }
            rows.extend(t.coeffs.iter().cloned());
        }
        let mut rhs = vec![BigRat::zero(); rows.len()];
        if ansatz == Ansatz::Monic {
            let mut row = vec![BigRat::zero(); nvars];
            row[d] = BigRat::one();
            rows.push(row);
            rhs.push(BigRat::one());
        }
        let Some(sol) = solve_rational(&rows, &rhs, nvars) else {
            continue;
        };
        let candidates: Vec<Vec<BigRat>> = match ansatz {
            Ansatz::Monic => std::iter::once(sol.particular.clone())
                .chain(
                    sol.nullspace
                        .iter()
                        .map(|n| sol.particular.iter().zip(n).map(|(a, b)| a + b).collect()),
                )
                .collect(),
            Ansatz::Full => sol.nullspace.clone(),
        };
        for c in candidates {
            if c[1..].iter().all(Zero::is_zero) {
                continue;
            }
            let q = Poly::new(c).monic();
            let order = compose_polynomial(&cf, &q).minimal_order();
            if order < r {
                return ReductionResult::Found { q, order };
            }
        }
    }
    ReductionResult::NotFound
}

/// `k`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            cur: (k <= n).then(|| (0..k).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let k = out.len();
        let mut next = out.clone();
        let mut i = k;
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - k + i {
                next[i] += 1;
                for j in i + 1..k {
                    next[j] = next[j - 1] + 1;
                }
                self.cur = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    fn cf(terms: &[(i64, i64, i64)]) -> RationalClosedForm {
        RationalClosedForm::new(
            terms
                .iter()
                .map(|&(c, num, den)| Term {
                    poly: Poly::from_i64(&[c]),
                    base: r(num, den),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn combinations_in_order() {
        let all: Vec<Vec<usize>> = Combinations::new(4, 2).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(Combinations::new(3, 0).count(), 1);
        assert_eq!(Combinations::new(2, 3).count(), 0);
    }

    #[test]
    fn symbolic_single_base() {
        let s = symbolic_compose(&cf(&[(1, 2, 1)]), 2);
        let bases: Vec<BigRat> = s.terms.iter().map(|t| t.base.clone()).collect();
        assert_eq!(bases, vec![r(1, 1), r(2, 1), r(4, 1)]);
        for (j, t) in s.terms.iter().enumerate() {
            let mut e = vec![r(0, 1); 3];
            e[j] = r(1, 1);
            assert_eq!(t.coeffs, vec![e]);
        }
    }

    #[test]
    fn symbolic_collects_products() {
        let a = cf(&[(1, 1, 1), (1, 2, 1), (1, 1, 2)]);
        let s = symbolic_compose(&a, 2);
        let bases: Vec<BigRat> = s.terms.iter().map(|t| t.base.clone()).collect();
        assert_eq!(bases, vec![r(1, 4), r(1, 2), r(1, 1), r(2, 1), r(4, 1)]);
        // base 1 collects q_0 + q_1 + 3 q_2
        assert_eq!(s.terms[2].coeffs, vec![vec![r(1, 1), r(1, 1), r(3, 1)]]);
        let q = Poly::from_i64(&[-1, -2, 1]);
        assert_eq!(s.specialize(&q), compose_polynomial(&a, &q));
    }

    #[test]
    fn example_one_first() {
        let a = cf(&[(1, 1, 1), (1, 2, 1), (1, 1, 2)]);
        assert_eq!(
            reduce_order(&a, 2),
            ReductionResult::Found {
                q: Poly::from_i64(&[-1, -2, 1]),
                order: 2
            }
        );
    }

    #[test]
    fn example_one_second() {
        let a = cf(&[(1, 1, 1), (1, 3, 1), (1, 9, 1), (2, 27, 1), (-2, 81, 1)]);
        assert_eq!(
            reduce_order(&a, 2),
            ReductionResult::Found {
                q: Poly::from_i64(&[2, -3, 1]),
                order: 4
            }
        );
    }

    #[test]
    fn constant_shift_reduces_full_search() {
        // dropping the constant term always lowers the order by one
        let a = cf(&[(1, 1, 1), (1, 2, 1), (-1, 1, 2)]);
        assert_eq!(
            reduce_order_with(&a, 1, Ansatz::Full),
            ReductionResult::Found {
                q: Poly::from_i64(&[-1, 1]),
                order: 2
            }
        );
    }

    #[test]
    fn trivial_inputs() {
        assert_eq!(reduce_order(&RationalClosedForm::zero(), 3), ReductionResult::NotFound);
        assert_eq!(reduce_order(&cf(&[(1, 2, 1)]), 0), ReductionResult::NotFound);
    }
}
