//! Counting lonely points of a cone.
//!
//! The nonlonely points of a cone are closed under translation by the cone,
//! so they form a finite union of translated cones `b + C`. The counting
//! procedure walks the cone coordinates `ℕ^n` in order of increasing
//! 1-norm, like an FGLM staircase: each lonely point spawns its `n`
//! successors unless they are already covered by a known nonlonely `b + C`.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;

use super::LonelyCount;
use crate::error::{Error, Result};
use crate::geometry::{
    edge_lonely_condition, lattice_cone_trivial, partner_in_cone, Cone, Lattice, Point, DEFAULT_MAX_BOX,
};

/// Algorithm 1: the cone has infinitely many lonely points iff `L ∩ C = {0}`
/// and some edge satisfies `(L + ⟨c_i⟩) ∩ C = [c_i]`.
pub fn has_infinitely_many_lonely_points(l: &Lattice, c: &Cone) -> Result<bool> {
    Ok(infinite_edge(l, c)?.is_some())
}

/// The first edge (0-based) all of whose points are lonely, if the cone has
/// infinitely many lonely points.
pub fn infinite_edge(l: &Lattice, c: &Cone) -> Result<Option<usize>> {
    if !lattice_cone_trivial(l, c)? {
        return Ok(None);
    }
    for i in 0..c.num_generators() {
        if edge_lonely_condition(l, c, i)? {
            return Ok(Some(i));
        }
    }
    Ok(None)
}

/// Cone coordinates ordered by 1-norm, ties broken so that the
/// lexicographically larger vector comes first (`(1,0)` before `(0,1)`).
#[derive(Debug, Clone, PartialEq, Eq)]
struct Candidate(Vec<u64>);

impl Candidate {
    fn norm(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> Ordering {
        self.norm()
            .cmp(&other.norm())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// One iteration of the counting loop, as seen after it completed.
/// Vectors are cone coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaircaseStep {
    /// The processed candidate; `None` for the initialization row.
    pub v: Option<Vec<u64>>,
    pub lonely: bool,
    /// Remaining candidates in selection order.
    pub todo: Vec<Vec<u64>>,
    /// Collected nonlonely points, in discovery order.
    pub nonlonely: Vec<Vec<u64>>,
    pub npoints: u64,
}

/// State of the counting loop.
#[derive(Debug, Clone)]
pub struct StaircaseState {
    todo: BTreeSet<Candidate>,
    nonlonely: Vec<(Vec<u64>, Point)>,
    npoints: u64,
}

impl StaircaseState {
    fn new(n: usize) -> Self {
        let todo = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                Candidate(e)
            })
            .collect();
        StaircaseState {
            todo,
            nonlonely: Vec::new(),
            npoints: 1,
        }
    }

    fn snapshot(&self, v: Option<Vec<u64>>, lonely: bool) -> StaircaseStep {
        StaircaseStep {
            v,
            lonely,
            todo: self.todo.iter().map(|c| c.0.clone()).collect(),
            nonlonely: self.nonlonely.iter().map(|(b, _)| b.clone()).collect(),
            npoints: self.npoints,
        }
    }
}

/// Full result of running the counting procedure on a cone.
#[derive(Debug, Clone)]
pub struct StaircaseRun {
    pub count: LonelyCount,
    /// The lonely points found, sorted; empty when the count is infinite.
    pub lonely_points: Vec<Point>,
    /// Iteration log of the main loop; empty when the loop was not entered.
    pub steps: Vec<StaircaseStep>,
}

fn coords_to_bigint(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

pub fn run_staircase(l: &Lattice, c: &Cone, max_box: u128) -> Result<StaircaseRun> {
    if l.ambient_dim() != c.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: l.ambient_dim(),
            found: c.ambient_dim(),
        });
    }
    if has_infinitely_many_lonely_points(l, c)? {
        return Ok(StaircaseRun {
            count: LonelyCount::Infinite,
            lonely_points: Vec::new(),
            steps: Vec::new(),
        });
    }
    // 0 is lonely iff L ∩ C = {0}
    if !lattice_cone_trivial(l, c)? {
        return Ok(StaircaseRun {
            count: LonelyCount::Finite(0),
            lonely_points: Vec::new(),
            steps: Vec::new(),
        });
    }

    let n = c.num_generators();
    let mut state = StaircaseState::new(n);
    let mut lonely_points = vec![Point::zero(c.ambient_dim())];
    let mut steps = vec![state.snapshot(None, true)];

    while let Some(cand) = state.todo.pop_first() {
        let v = cand.0;
        let point = c.point_at(&coords_to_bigint(&v));
        let lonely = partner_in_cone(l, c, &point, max_box)?.is_none();
        if lonely {
            state.npoints += 1;
            for i in 0..n {
                let succ = &point + &c.generator(i);
                let mut covered = false;
                for (_, b) in &state.nonlonely {
                    if c.contains_point(&(&succ - b))? {
                        covered = true;
                        break;
                    }
                }
                if !covered {
                    let mut w = v.clone();
                    w[i] += 1;
                    state.todo.insert(Candidate(w));
                }
            }
            lonely_points.push(point);
        } else {
            state.nonlonely.push((v.clone(), point));
        }
        steps.push(state.snapshot(Some(v), lonely));
    }

    lonely_points.sort();
    Ok(StaircaseRun {
        count: LonelyCount::Finite(state.npoints),
        lonely_points,
        steps,
    })
}

/// Algorithm 2: `#lonely_L(C)`.
pub fn number_of_lonely_points(l: &Lattice, c: &Cone) -> Result<LonelyCount> {
    number_of_lonely_points_with_limit(l, c, DEFAULT_MAX_BOX)
}

pub fn number_of_lonely_points_with_limit(l: &Lattice, c: &Cone, max_box: u128) -> Result<LonelyCount> {
    Ok(run_staircase(l, c, max_box)?.count)
}

/// The lonely points of the cone, sorted. Fails with
/// [`Error::InfiniteCount`] when there are infinitely many.
pub fn lonely_points_in_cone(l: &Lattice, c: &Cone) -> Result<Vec<Point>> {
    let run = run_staircase(l, c, DEFAULT_MAX_BOX)?;
    if run.count.is_infinite() {
        return Err(Error::InfiniteCount);
    }
    Ok(run.lonely_points)
}

/// Algorithm 3: `lim_{d→∞} #lonely_L(d·S)`, the sum of the counts of all
/// `m + 1` corner cones.
pub fn ultimate_number_of_lonely_points(l: &Lattice, m: usize) -> Result<LonelyCount> {
    ultimate_number_of_lonely_points_with_limit(l, m, DEFAULT_MAX_BOX)
}

pub fn ultimate_number_of_lonely_points_with_limit(l: &Lattice, m: usize, max_box: u128) -> Result<LonelyCount> {
    if l.ambient_dim() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: l.ambient_dim(),
        });
    }
    let mut total = LonelyCount::Finite(0);
    for i in 0..=m {
        let c = Cone::corner(m, i)?;
        total = total + number_of_lonely_points_with_limit(l, &c, max_box)?;
        if total.is_infinite() {
            break;
        }
    }
    Ok(total)
}
