use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::geometry::{DilatedSimplex, Lattice, Point};

/// Default cap on the number of simplex points the oracle will visit.
pub const DEFAULT_MAX_POINTS: u128 = 20_000_000;

/// Brute-force lonely points of `d·S`: groups the integer points by their
/// canonical representative modulo `L` and keeps the singleton classes.
/// Output is sorted lexicographically.
pub fn enumerate_lonely_simplex(l: &Lattice, m: usize, d: u64) -> Result<Vec<Point>> {
    enumerate_lonely_simplex_with_limit(l, m, d, DEFAULT_MAX_POINTS)
}

pub fn enumerate_lonely_simplex_with_limit(l: &Lattice, m: usize, d: u64, max_points: u128) -> Result<Vec<Point>> {
    if l.ambient_dim() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: l.ambient_dim(),
        });
    }
    let simplex = DilatedSimplex::new(m, d);
    let needed = simplex.num_points();
    if needed > max_points {
        return Err(Error::ResourceLimit {
            needed,
            limit: max_points,
        });
    }
    lonely_among(l, simplex.points())
}

/// The points of `points` that are not equivalent to any other point of it.
/// Duplicates in the input count as one point.
pub fn lonely_among<I: IntoIterator<Item = Point>>(l: &Lattice, points: I) -> Result<Vec<Point>> {
    let mut classes: BTreeMap<Point, Option<Point>> = BTreeMap::new();
    for p in points {
        let rep = l.canonical_rep(&p)?;
        classes
            .entry(rep)
            .and_modify(|slot| {
                if slot.as_ref() != Some(&p) {
                    *slot = None;
                }
            })
            .or_insert(Some(p));
    }
    let mut out: Vec<Point> = classes.into_values().flatten().collect();
    out.sort();
    Ok(out)
}
