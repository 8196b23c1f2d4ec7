use std::fmt;

use crate::error::Result;
use crate::geometry::{edge_lonely_condition, lattice_cone_trivial, Cone, Lattice};

/// Which dimension bound applies to a lattice in `ℤ^m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundGuarantee {
    /// `dim L < (m − 4)/3`: some corner cone has infinitely many lonely points.
    Theorem1,
    /// `m ≥ 3` and `dim L < 2m/3`: some corner cone meets `L` only in 0.
    Corollary2,
    None,
}

impl BoundGuarantee {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundGuarantee::Theorem1 => "theorem1",
            BoundGuarantee::Corollary2 => "corollary2",
            BoundGuarantee::None => "none",
        }
    }
}

impl fmt::Display for BoundGuarantee {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evaluates the two dimension bounds on `k = dim L`, in integer arithmetic.
pub fn dimension_bound_guarantee(l: &Lattice, m: usize) -> BoundGuarantee {
    let k = l.dim();
    if m > 4 && 3 * k < m - 4 {
        BoundGuarantee::Theorem1
    } else if m >= 3 && 3 * k < 2 * m {
        BoundGuarantee::Corollary2
    } else {
        BoundGuarantee::None
    }
}

/// Searches the corner cones `C_1..C_m` for a slanted edge `e_j − e_i` all of
/// whose points are lonely. Returns `(i, edge)` with `edge` the 0-based
/// generator index.
pub fn slanted_lonely_edge(l: &Lattice, m: usize) -> Result<Option<(usize, usize)>> {
    for i in 1..=m {
        let c = Cone::corner(m, i)?;
        if !lattice_cone_trivial(l, &c)? {
            continue;
        }
        for e in 1..c.num_generators() {
            if edge_lonely_condition(l, &c, e)? {
                return Ok(Some((i, e)));
            }
        }
    }
    Ok(None)
}
