//! Lattice/cone intersection tests and loneliness of single cone points.
//!
//! The integer programs "is there a nonzero lattice point in the cone" are
//! decided as rational LPs over the real span of the lattice. A rational
//! solution scales by the common denominator of its coordinates to an
//! integral one, so feasibility of the relaxation and of the integer program
//! coincide for both tests.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{Cone, Lattice, Point};
use crate::error::{Error, Result};
use crate::exactla::{lp_feasible, lp_optimize, to_rat, BigRat, LpOutcome, LpProblem, VarSign};

/// Default cap on the number of integer candidates examined by a box search.
pub const DEFAULT_MAX_BOX: u128 = 50_000_000;

fn check_dims(l: &Lattice, c: &Cone) -> Result<()> {
    if l.ambient_dim() != c.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: l.ambient_dim(),
            found: c.ambient_dim(),
        });
    }
    Ok(())
}

/// Builds `Σ λ_t b_t (+ γ c_edge) − Σ β_j c_j = rhs` with λ (and γ) free and
/// β ≥ 0. Variable order: λ, then γ if present, then β.
fn span_meets_cone(l: &Lattice, c: &Cone, edge: Option<usize>, rhs: &[BigInt]) -> LpProblem {
    let k = l.dim();
    let n = c.num_generators();
    let extra = usize::from(edge.is_some());
    let mut signs = vec![VarSign::Free; k + extra];
    signs.extend(std::iter::repeat(VarSign::NonNegative).take(n));
    let mut p = LpProblem::new(signs);
    for r in 0..l.ambient_dim() {
        let mut row: Vec<BigRat> = (0..k).map(|t| to_rat(&l.basis()[(t, r)])).collect();
        if let Some(e) = edge {
            row.push(to_rat(&c.generators()[(e, r)]));
        }
        row.extend((0..n).map(|j| -to_rat(&c.generators()[(j, r)])));
        p.add_equality(row, to_rat(&rhs[r])).expect("row length");
    }
    p
}

fn common_denominator(xs: &[BigRat]) -> BigInt {
    xs.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn cone_point_from_witness(c: &Cone, beta: &[BigRat]) -> Point {
    let d = common_denominator(beta);
    let scaled: Vec<BigInt> = beta.iter().map(|b| (b * to_rat(&d)).to_integer()).collect();
    c.point_at(&scaled)
}

/// A nonzero point of `L ∩ C`, if there is one.
pub fn lattice_cone_witness(l: &Lattice, c: &Cone) -> Result<Option<Point>> {
    check_dims(l, c)?;
    let k = l.dim();
    let n = c.num_generators();
    let mut p = span_meets_cone(l, c, None, &vec![BigInt::zero(); l.ambient_dim()]);
    let mut norm = vec![BigRat::zero(); k];
    norm.extend(std::iter::repeat(BigRat::one()).take(n));
    p.set_normalization(norm)?;
    Ok(lp_feasible(&p).map(|x| {
        // λ must scale to integers as well, so take the denominator of all
        let d = common_denominator(&x);
        let beta: Vec<BigRat> = x[k..].iter().map(|b| b * to_rat(&d)).collect();
        cone_point_from_witness(c, &beta)
    }))
}

/// `L ∩ C = {0}`.
pub fn lattice_cone_trivial(l: &Lattice, c: &Cone) -> Result<bool> {
    Ok(lattice_cone_witness(l, c)?.is_none())
}

/// A point of `(L + ⟨c_i⟩) ∩ C` outside the edge `[c_i]`, if any.
/// `edge` is the 0-based generator index.
pub fn edge_witness(l: &Lattice, c: &Cone, edge: usize) -> Result<Option<Point>> {
    check_dims(l, c)?;
    c.check_edge(edge)?;
    let k = l.dim();
    let n = c.num_generators();
    let mut p = span_meets_cone(l, c, Some(edge), &vec![BigInt::zero(); l.ambient_dim()]);
    let mut norm = vec![BigRat::zero(); k + 1];
    norm.extend((0..n).map(|j| if j == edge { BigRat::zero() } else { BigRat::one() }));
    p.set_normalization(norm)?;
    Ok(lp_feasible(&p).map(|x| {
        let d = common_denominator(&x);
        let beta: Vec<BigRat> = x[k + 1..].iter().map(|b| b * to_rat(&d)).collect();
        cone_point_from_witness(c, &beta)
    }))
}

/// `(L + ⟨c_i⟩) ∩ C = [c_i]` for the 0-based edge index `edge`.
pub fn edge_lonely_condition(l: &Lattice, c: &Cone, edge: usize) -> Result<bool> {
    Ok(edge_witness(l, c, edge)?.is_none())
}

/// Whether the point `v ∈ C` has no partner `ṽ ∈ C ∖ {v}` with `ṽ − v ∈ L`.
///
/// Fails with [`Error::NotInCone`] when `v` is not a point of the cone.
pub fn is_lonely_in_cone(l: &Lattice, c: &Cone, v: &Point) -> Result<bool> {
    is_lonely_in_cone_with_limit(l, c, v, DEFAULT_MAX_BOX)
}

pub fn is_lonely_in_cone_with_limit(l: &Lattice, c: &Cone, v: &Point, max_box: u128) -> Result<bool> {
    check_dims(l, c)?;
    if !c.contains_point(v)? {
        return Err(Error::NotInCone(v.0.iter().map(|x| x.to_string()).collect()));
    }
    // a nonzero ℓ ∈ L ∩ C pairs v with v + ℓ
    if !lattice_cone_trivial(l, c)? {
        return Ok(false);
    }
    Ok(partner_in_cone(l, c, v, max_box)?.is_none())
}

/// Another point of `C` equivalent to `v`. Requires `L ∩ C = {0}`, which
/// makes the set `{α : v + Σ α_t b_t ∈ C}` a bounded polytope; its integer
/// points are enumerated inside the bounding box given by per-coordinate LPs.
pub(crate) fn partner_in_cone(l: &Lattice, c: &Cone, v: &Point, max_box: u128) -> Result<Option<Point>> {
    let k = l.dim();
    if k == 0 {
        return Ok(None);
    }
    let neg_v: Vec<BigInt> = v.0.iter().map(|x| -x).collect();
    let p = span_meets_cone(l, c, None, &neg_v);
    let n_vars = p.num_vars();

    let mut ranges = Vec::with_capacity(k);
    let mut volume: u128 = 1;
    for t in 0..k {
        let mut obj = vec![BigRat::zero(); n_vars];
        obj[t] = BigRat::one();
        let hi = match lp_optimize(&p, &obj, true) {
            LpOutcome::Optimal { value, .. } => value.floor().to_integer(),
            other => unreachable!("bounded feasible polytope, got {other:?}"),
        };
        let lo = match lp_optimize(&p, &obj, false) {
            LpOutcome::Optimal { value, .. } => value.ceil().to_integer(),
            other => unreachable!("bounded feasible polytope, got {other:?}"),
        };
        let width = (&hi - &lo + 1u32).to_u128().unwrap_or(u128::MAX);
        volume = volume.saturating_mul(width);
        if volume > max_box {
            return Err(Error::ResourceLimit {
                needed: volume,
                limit: max_box,
            });
        }
        ranges.push((lo, hi));
    }

    let mut alpha: Vec<BigInt> = ranges.iter().map(|(lo, _)| lo.clone()).collect();
    loop {
        if alpha.iter().any(|a| !a.is_zero()) {
            let w = &l.combination(&alpha) + v;
            if c.contains_point(&w)? {
                return Ok(Some(w));
            }
        }
        // odometer step
        let mut t = 0;
        loop {
            if t == k {
                return Ok(None);
            }
            if alpha[t] < ranges[t].1 {
                alpha[t] += 1;
                break;
            }
            alpha[t] = ranges[t].0.clone();
            t += 1;
        }
    }
}
