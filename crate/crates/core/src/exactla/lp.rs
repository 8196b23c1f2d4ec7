//! Exact rational linear programming by the two-phase simplex method.
//!
//! Pivoting follows Bland's rule (smallest entering index, smallest leaving
//! basis index on ratio ties), so the method never cycles and is fully
//! deterministic. Problems here have a handful of variables; the dense
//! tableau is rebuilt-free but reduced costs are recomputed every step.

use num_traits::{One, Signed, Zero};

use super::BigRat;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarSign {
    Free,
    NonNegative,
}

/// Equality constraints `A·x = b`, per-variable sign constraints and an
/// optional normalization `f·x = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    signs: Vec<VarSign>,
    equalities: Vec<(Vec<BigRat>, BigRat)>,
    normalization: Option<Vec<BigRat>>,
}

impl LpProblem {
    pub fn new(signs: Vec<VarSign>) -> Self {
        LpProblem {
            signs,
            equalities: Vec::new(),
            normalization: None,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.signs.len()
    }

    pub fn signs(&self) -> &[VarSign] {
        &self.signs
    }

    pub fn add_equality(&mut self, coeffs: Vec<BigRat>, rhs: BigRat) -> Result<()> {
        self.check_len(coeffs.len())?;
        self.equalities.push((coeffs, rhs));
        Ok(())
    }

    pub fn set_normalization(&mut self, form: Vec<BigRat>) -> Result<()> {
        self.check_len(form.len())?;
        self.normalization = Some(form);
        Ok(())
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: n,
            });
        }
        Ok(())
    }

    fn all_rows(&self) -> Vec<(Vec<BigRat>, BigRat)> {
        let mut rows = self.equalities.clone();
        if let Some(f) = &self.normalization {
            rows.push((f.clone(), BigRat::one()));
        }
        rows
    }

    /// Checks every constraint exactly.
    pub fn is_satisfied_by(&self, x: &[BigRat]) -> bool {
        if x.len() != self.num_vars() {
            return false;
        }
        let signs_ok = self
            .signs
            .iter()
            .zip(x)
            .all(|(s, v)| *s == VarSign::Free || !v.is_negative());
        signs_ok
            && self
                .all_rows()
                .iter()
                .all(|(a, b)| dot(a, x) == *b)
    }
}

fn dot(a: &[BigRat], x: &[BigRat]) -> BigRat {
    a.iter()
        .zip(x)
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, x)| a * x)
        .fold(BigRat::zero(), |s, t| s + t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Infeasible,
    Unbounded,
    Optimal { value: BigRat, point: Vec<BigRat> },
}

struct Tableau {
    rows: Vec<Vec<BigRat>>,
    basis: Vec<usize>,
    // number of structural (non-artificial) columns
    structural: usize,
}

impl Tableau {
    fn rhs_col(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len() - 1)
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost · x` over the current tableau. Columns with
    /// `allowed[j] == false` never enter the basis.
    fn minimize(&mut self, cost: &[BigRat], allowed: &[bool]) -> bool {
        let rhs = self.rhs_col();
        loop {
            let entering = (0..rhs).find(|&j| {
                allowed[j] && !self.basis.contains(&j) && {
                    let mut rc = cost[j].clone();
                    for (i, &b) in self.basis.iter().enumerate() {
                        if !cost[b].is_zero() && !self.rows[i][j].is_zero() {
                            rc -= &cost[b] * &self.rows[i][j];
                        }
                    }
                    rc.is_negative()
                }
            });
            let Some(c) = entering else {
                return true;
            };
            let mut best: Option<(usize, BigRat)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rows[i][rhs] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => {
                        ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi])
                    }
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    fn objective(&self, cost: &[BigRat]) -> BigRat {
        let rhs = self.rhs_col();
        self.basis
            .iter()
            .enumerate()
            .map(|(i, &b)| &cost[b] * &self.rows[i][rhs])
            .fold(BigRat::zero(), |s, t| s + t)
    }

    fn point(&self) -> Vec<BigRat> {
        let rhs = self.rhs_col();
        let mut x = vec![BigRat::zero(); self.structural];
        for (i, &b) in self.basis.iter().enumerate() {
            if b < self.structural {
                x[b] = self.rows[i][rhs].clone();
            }
        }
        x
    }
}

/// Column layout of the standard-form problem: each free variable is split
/// into a positive and a negative part.
struct Layout {
    // (plus column, optional minus column) per original variable
    cols: Vec<(usize, Option<usize>)>,
    structural: usize,
}

impl Layout {
    fn new(signs: &[VarSign]) -> Self {
        let mut next = 0;
        let cols = signs
            .iter()
            .map(|s| {
                let plus = next;
                next += 1;
                let minus = (*s == VarSign::Free).then(|| {
                    next += 1;
                    next - 1
                });
                (plus, minus)
            })
            .collect();
        Layout {
            cols,
            structural: next,
        }
    }

    fn expand(&self, coeffs: &[BigRat]) -> Vec<BigRat> {
        let mut out = vec![BigRat::zero(); self.structural];
        for (a, (p, m)) in coeffs.iter().zip(&self.cols) {
            out[*p] = a.clone();
            if let Some(m) = m {
                out[*m] = -a.clone();
            }
        }
        out
    }

    fn collapse(&self, x: &[BigRat]) -> Vec<BigRat> {
        self.cols
            .iter()
            .map(|(p, m)| match m {
                Some(m) => &x[*p] - &x[*m],
                None => x[*p].clone(),
            })
            .collect()
    }
}

/// Runs phase one. On success returns a tableau whose basis contains no
/// artificial column, with redundant rows removed.
fn phase_one(p: &LpProblem, layout: &Layout) -> Option<Tableau> {
    let rows_in = p.all_rows();
    let m = rows_in.len();
    let n = layout.structural;
    let mut rows = Vec::with_capacity(m);
    for (i, (a, b)) in rows_in.iter().enumerate() {
        let mut row = layout.expand(a);
        let flip = b.is_negative();
        if flip {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row.extend((0..m).map(|k| if k == i { BigRat::one() } else { BigRat::zero() }));
        row.push(if flip { -b.clone() } else { b.clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        structural: n,
    };
    let cost: Vec<BigRat> = (0..n + m)
        .map(|j| if j < n { BigRat::zero() } else { BigRat::one() })
        .collect();
    let allowed = vec![true; n + m];
    let bounded = t.minimize(&cost, &allowed);
    debug_assert!(bounded, "phase one objective is bounded below by zero");
    if !t.objective(&cost).is_zero() {
        return None;
    }

    // drive artificial columns out of the basis
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => t.pivot(i, j),
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                    continue;
                }
            }
        }
        i += 1;
    }
    for row in t.rows.iter_mut() {
        row.drain(n..n + m);
    }
    Some(t)
}

/// Returns a feasible point when one exists.
pub fn lp_feasible(p: &LpProblem) -> Option<Vec<BigRat>> {
    let layout = Layout::new(&p.signs);
    let t = phase_one(p, &layout)?;
    let x = layout.collapse(&t.point());
    debug_assert!(p.is_satisfied_by(&x));
    Some(x)
}

/// Maximizes (or minimizes) `objective · x` subject to `p`.
pub fn lp_optimize(p: &LpProblem, objective: &[BigRat], maximize: bool) -> LpOutcome {
    assert_eq!(objective.len(), p.num_vars());
    let layout = Layout::new(&p.signs);
    let Some(mut t) = phase_one(p, &layout) else {
        return LpOutcome::Infeasible;
    };
    let mut cost = layout.expand(objective);
    if maximize {
        for c in cost.iter_mut() {
            *c = -c.clone();
        }
    }
    let allowed = vec![true; layout.structural];
    if !t.minimize(&cost, &allowed) {
        return LpOutcome::Unbounded;
    }
    let point = layout.collapse(&t.point());
    let value = dot(objective, &point);
    LpOutcome::Optimal { value, point }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> BigRat {
        BigRat::from_integer(x.into())
    }

    fn v(xs: &[i64]) -> Vec<BigRat> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn simplex_segment_is_feasible() {
        let mut p = LpProblem::new(vec![VarSign::NonNegative; 2]);
        p.add_equality(v(&[1, 1]), q(1)).unwrap();
        let x = lp_feasible(&p).unwrap();
        assert!(p.is_satisfied_by(&x));
    }

    #[test]
    fn negative_value_is_infeasible() {
        let mut p = LpProblem::new(vec![VarSign::NonNegative]);
        p.add_equality(v(&[1]), q(-1)).unwrap();
        assert!(lp_feasible(&p).is_none());
    }

    // λ·(2,-3) = β₁·(1,0) + β₂·(0,1), β₁ + β₂ = 1: the line through (2,-3)
    // only touches the closed quadrant at the origin.
    #[test]
    fn line_misses_quadrant() {
        let mut p = LpProblem::new(vec![VarSign::Free, VarSign::NonNegative, VarSign::NonNegative]);
        p.add_equality(v(&[2, -1, 0]), q(0)).unwrap();
        p.add_equality(v(&[-3, 0, -1]), q(0)).unwrap();
        p.set_normalization(v(&[0, 1, 1])).unwrap();
        assert!(lp_feasible(&p).is_none());
    }

    #[test]
    fn free_variable_takes_negative_value() {
        let mut p = LpProblem::new(vec![VarSign::Free, VarSign::NonNegative]);
        p.add_equality(v(&[1, 1]), q(-3)).unwrap();
        let x = lp_feasible(&p).unwrap();
        assert!(p.is_satisfied_by(&x));
        assert!(x[0] <= q(-3));
    }

    #[test]
    fn redundant_rows_are_tolerated() {
        let mut p = LpProblem::new(vec![VarSign::NonNegative; 3]);
        p.add_equality(v(&[1, 1, 1]), q(2)).unwrap();
        p.add_equality(v(&[2, 2, 2]), q(4)).unwrap();
        p.add_equality(v(&[1, -1, 0]), q(0)).unwrap();
        let x = lp_feasible(&p).unwrap();
        assert!(p.is_satisfied_by(&x));
        match lp_optimize(&p, &v(&[0, 0, 1]), true) {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, q(2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn optimize_bounds_and_unbounded() {
        // x + y = 4, x, y ≥ 0: x ∈ [0, 4]
        let mut p = LpProblem::new(vec![VarSign::NonNegative; 2]);
        p.add_equality(v(&[1, 1]), q(4)).unwrap();
        let max = lp_optimize(&p, &v(&[1, 0]), true);
        let min = lp_optimize(&p, &v(&[1, 0]), false);
        assert!(matches!(max, LpOutcome::Optimal { ref value, .. } if *value == q(4)));
        assert!(matches!(min, LpOutcome::Optimal { ref value, .. } if *value == q(0)));

        let mut p = LpProblem::new(vec![VarSign::Free, VarSign::NonNegative]);
        p.add_equality(v(&[1, -1]), q(0)).unwrap();
        assert_eq!(lp_optimize(&p, &v(&[1, 0]), true), LpOutcome::Unbounded);
    }

    #[test]
    fn no_constraints() {
        let p = LpProblem::new(vec![VarSign::NonNegative, VarSign::Free]);
        assert_eq!(lp_feasible(&p), Some(v(&[0, 0])));
    }

    #[test]
    fn wrong_length_rejected() {
        let mut p = LpProblem::new(vec![VarSign::Free]);
        assert!(p.add_equality(v(&[1, 2]), q(0)).is_err());
    }
}
