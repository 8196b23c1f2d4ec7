//! Brute-force helpers shared by the integration tests. Nothing here calls
//! the LP or HNF code.
#![allow(dead_code)]

use lonely_core::geometry::{Lattice, Point};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_gens(rng: &mut StdRng, m: usize, k: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..k).map(|_| (0..m).map(|_| rng.gen_range(-bound..=bound)).collect()).collect()
}

pub fn lattice(m: usize, gens: &[Vec<i64>]) -> Lattice {
    Lattice::from_i64(m, gens)
}

/// Membership in the corner cone `C_i` straight from the inequalities.
pub fn in_corner(v: &[i64], i: usize) -> bool {
    if i == 0 {
        return v.iter().all(|&x| x >= 0);
    }
    let vi = v[i - 1];
    let rest: i64 = v.iter().enumerate().filter(|&(j, _)| j + 1 != i).map(|(_, &x)| x).sum();
    vi <= 0 && v.iter().enumerate().all(|(j, &x)| j + 1 == i || x >= 0) && -vi >= rest
}

/// Generators of `C_i` in library order: `e_1..e_m` for `i = 0`, otherwise
/// `-e_i` followed by `e_j - e_i`, `j ≠ i`.
pub fn corner_gens(m: usize, i: usize) -> Vec<Vec<i64>> {
    let unit = |j: usize| -> Vec<i64> { (0..m).map(|t| i64::from(t + 1 == j)).collect() };
    if i == 0 {
        return (1..=m).map(unit).collect();
    }
    let ei = unit(i);
    let mut out = vec![ei.iter().map(|x| -x).collect::<Vec<i64>>()];
    for j in (1..=m).filter(|&j| j != i) {
        out.push(unit(j).iter().zip(&ei).map(|(a, b)| a - b).collect());
    }
    out
}

/// All coefficient vectors in `[-b, b]^k`.
pub fn coefficient_box(k: usize, b: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (-b..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn combine(gens: &[Vec<i64>], alpha: &[i64], m: usize) -> Vec<i64> {
    let mut v = vec![0; m];
    for (g, a) in gens.iter().zip(alpha) {
        for t in 0..m {
            v[t] += a * g[t];
        }
    }
    v
}

/// A nonzero lattice combination with coefficients in `[-b, b]` inside `C_i`.
pub fn brute_lattice_meets_corner(gens: &[Vec<i64>], m: usize, i: usize, b: i64) -> bool {
    coefficient_box(gens.len(), b).iter().any(|a| {
        let v = combine(gens, a, m);
        v.iter().any(|&x| x != 0) && in_corner(&v, i)
    })
}

fn is_nonneg_multiple(v: &[i64], c: &[i64]) -> bool {
    let t = match c.iter().position(|&x| x != 0) {
        Some(p) => {
            if v[p] % c[p] != 0 {
                return false;
            }
            v[p] / c[p]
        }
        None => return v.iter().all(|&x| x == 0),
    };
    t >= 0 && v.iter().zip(c).all(|(a, b)| *a == t * b)
}

/// A point `ℓ + γ c` in `C_i` but off the edge `[c]`, with all coefficients
/// in `[-b, b]`.
pub fn brute_edge_violated(gens: &[Vec<i64>], m: usize, i: usize, c: &[i64], b: i64) -> bool {
    let mut ext = gens.to_vec();
    ext.push(c.to_vec());
    coefficient_box(ext.len(), b).iter().any(|a| {
        let v = combine(&ext, a, m);
        in_corner(&v, i) && !is_nonneg_multiple(&v, c)
    })
}

/// Lonely points of `d·S` by pairwise comparison.
pub fn brute_lonely_simplex(gens: &[Vec<i64>], m: usize, d: i64) -> Vec<Vec<i64>> {
    let pts = simplex_points(m, d);
    let l = lattice(m, gens);
    let mut out = Vec::new();
    for p in &pts {
        let pp = Point::from_i64(p);
        let alone = pts
            .iter()
            .all(|q| q == p || !l.contains(&(&Point::from_i64(q) - &pp)).unwrap());
        if alone {
            out.push(p.clone());
        }
    }
    out
}

pub fn simplex_points(m: usize, d: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=d - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn to_i64(points: &[Point]) -> Vec<Vec<i64>> {
    points.iter().map(|p| p.to_i64().unwrap()).collect()
}
