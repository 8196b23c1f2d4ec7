use std::collections::HashMap;

use num_traits::One;

use crate::exactla::BigRat;
use crate::geometry::DilatedSimplex;

/// Groups the exponent vectors `v ∈ ℕ^m`, `‖v‖₁ ≤ d`, by the exact value of
/// `Π φ_i^{v_i}` and counts those alone in their group.
pub(crate) fn count_partnerless(bases: &[BigRat], d: u64) -> u64 {
    let mut groups: HashMap<BigRat, u64> = HashMap::new();
    for v in DilatedSimplex::new(bases.len(), d).points() {
        let mut prod = BigRat::one();
        for (b, e) in bases.iter().zip(v.coords()) {
            let e = u32::try_from(e).expect("exponent fits in u32");
            prod *= num_traits::pow(b.clone(), e as usize);
        }
        *groups.entry(prod).or_default() += 1;
    }
    groups.values().filter(|&&c| c == 1).count() as u64
}
