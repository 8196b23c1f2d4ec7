use num_bigint::BigInt;

use super::Point;

/// The dilated standard simplex `d·S ⊆ ℝ^m`. Its integer points are the
/// `v ∈ ℕ^m` with `Σ v_j ≤ d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DilatedSimplex {
    pub ambient_dim: usize,
    pub dilation: u64,
}

impl DilatedSimplex {
    pub fn new(ambient_dim: usize, dilation: u64) -> Self {
        DilatedSimplex {
            ambient_dim,
            dilation,
        }
    }

    pub fn contains(&self, v: &Point) -> bool {
        use num_traits::Signed;
        v.dim() == self.ambient_dim
            && v.0.iter().all(|x| !x.is_negative())
            && v.0.iter().sum::<BigInt>() <= BigInt::from(self.dilation)
    }

    /// Number of integer points, `C(d + m, m)`, saturating.
    pub fn num_points(&self) -> u128 {
        let (d, m) = (self.dilation as u128, self.ambient_dim as u128);
        let mut acc: u128 = 1;
        for k in 1..=m {
            acc = match acc.checked_mul(d + k) {
                Some(x) => x / k,
                None => return u128::MAX,
            };
        }
        acc
    }

    /// All integer points in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> {
        let m = self.ambient_dim;
        let d = self.dilation;
        let mut cur: Option<Vec<u64>> = Some(vec![0; m]);
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            cur = next_point(&out, d);
            Some(Point(out.iter().map(|&x| BigInt::from(x)).collect()))
        })
    }
}

// successor in lexicographic order among v ∈ ℕ^m with Σv ≤ d
fn next_point(v: &[u64], d: u64) -> Option<Vec<u64>> {
    let mut w = v.to_vec();
    let mut sum: u64 = w.iter().sum();
    for k in (0..w.len()).rev() {
        if sum < d {
            w[k] += 1;
            return Some(w);
        }
        sum -= w[k];
        w[k] = 0;
    }
    None
}
