use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::uncancellable::count_partnerless;
use crate::error::{Error, Result};
use crate::exactla::{integer_kernel, BigRat, IntMatrix};
use crate::geometry::Lattice;
use crate::lonely::ultimate_number_of_lonely_points;

/// Refines a list of integers `> 1` into pairwise coprime integers `> 1`
/// such that every input is a product of powers of them.
fn coprime_base(nums: &[BigInt]) -> Vec<BigInt> {
    let mut base: Vec<BigInt> = Vec::new();
    for n in nums {
        if n > &BigInt::one() && !base.contains(n) {
            base.push(n.clone());
        }
    }
    'outer: loop {
        for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if g.is_one() {
                    continue;
                }
                let (a, b) = (&base[i] / &g, &base[j] / &g);
                base.swap_remove(j);
                base.swap_remove(i);
                for x in [g, a, b] {
                    if x > BigInt::one() && !base.contains(&x) {
                        base.push(x);
                    }
                }
                continue 'outer;
            }
        }
        break;
    }
    base.sort();
    base
}

fn valuation(mut n: BigInt, p: &BigInt) -> i64 {
    let mut k = 0;
    while (&n % p).is_zero() {
        n /= p;
        k += 1;
    }
    k
}

/// `{v ∈ ℤ^m : Π φ_i^{v_i} = 1}`.
///
/// Each `|φ_i|` is factored over a coprime base of all numerators and
/// denominators, which makes the absolute-value condition a linear system
/// over ℤ. The sign condition `Σ_{φ_i < 0} v_i ≡ 0 (mod 2)` is an extra
/// column with a slack row of weight 2; projecting the kernel away from the
/// slack coordinate gives the lattice.
pub fn exponent_lattice(bases: &[BigRat]) -> Result<Lattice> {
    if bases.iter().any(|b| b.is_zero()) {
        return Err(Error::ZeroBase);
    }
    let m = bases.len();
    let mut parts: Vec<BigInt> = Vec::new();
    for b in bases {
        parts.push(b.numer().abs());
        parts.push(b.denom().clone());
    }
    let primes = coprime_base(&parts);
    let cols = primes.len() + 1;
    let mut rows = Vec::with_capacity(m + 1);
    for b in bases {
        let mut row: Vec<BigInt> = primes
            .iter()
            .map(|p| BigInt::from(valuation(b.numer().abs(), p) - valuation(b.denom().clone(), p)))
            .collect();
        row.push(BigInt::from(u8::from(b.is_negative())));
        rows.push(row);
    }
    let mut slack = vec![BigInt::zero(); cols];
    slack[cols - 1] = BigInt::from(2);
    rows.push(slack);
    let kernel = integer_kernel(&IntMatrix::from_rows(cols, rows)?);
    let projected: Vec<Vec<BigInt>> = kernel.iter_rows().map(|r| r[..m].to_vec()).collect();
    Ok(Lattice::new(IntMatrix::from_rows(m, projected)?))
}

/// The number of terms in the expansion of `q(a_n)`, `deg q ≤ d`, that
/// have no cancellation partner.
pub fn uncancellable_term_count(bases: &[BigRat], d: u64) -> Result<u64> {
    if bases.iter().any(|b| b.is_zero()) {
        return Err(Error::ZeroBase);
    }
    Ok(count_partnerless(bases, d))
}

/// Whether the number of partner-less terms grows without bound in `d`,
/// which caps the degree of any order-reducing polynomial.
pub fn degree_bound_exists(bases: &[BigRat]) -> Result<bool> {
    let l = exponent_lattice(bases)?;
    Ok(ultimate_number_of_lonely_points(&l, bases.len())?.is_infinite())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;

    fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    fn basis(l: &Lattice) -> Vec<Vec<i64>> {
        l.basis_vectors().iter().map(|p| p.to_i64().unwrap()).collect()
    }

    #[test]
    fn coprime_refinement() {
        let b = coprime_base(&[BigInt::from(12), BigInt::from(18), BigInt::from(1)]);
        assert_eq!(b, vec![BigInt::from(2), BigInt::from(3)]);
        let b = coprime_base(&[BigInt::from(4), BigInt::from(8)]);
        assert_eq!(b, vec![BigInt::from(2)]);
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(basis(&exponent_lattice(&[r(2, 1), r(1, 2)]).unwrap()), vec![vec![1, 1]]);
        assert_eq!(basis(&exponent_lattice(&[r(-1, 1), r(2, 1)]).unwrap()), vec![vec![2, 0]]);
        assert_eq!(basis(&exponent_lattice(&[r(4, 1), r(8, 1)]).unwrap()), vec![vec![3, -2]]);
        assert_eq!(exponent_lattice(&[r(2, 1), r(3, 1)]).unwrap().dim(), 0);
        assert_eq!(exponent_lattice(&[r(0, 1)]), Err(Error::ZeroBase));
    }

    #[test]
    fn negative_bases() {
        // (-2)^2 · 4^-1 = 1, (-2)·(-1/2) = 1
        let l = exponent_lattice(&[r(-2, 1), r(4, 1), r(-1, 2)]).unwrap();
        assert!(l.contains(&Point::from_i64(&[2, -1, 0])).unwrap());
        assert!(l.contains(&Point::from_i64(&[1, 0, 1])).unwrap());
        assert!(!l.contains(&Point::from_i64(&[1, 0, -1])).unwrap());
        assert_eq!(l.dim(), 2);
    }

    #[test]
    fn example_four_bases() {
        let l = exponent_lattice(&[r(2, 1), r(3, 1), r(4, 1), r(6, 1)]).unwrap();
        let ex4 = Lattice::from_i64(4, &[[2, 0, -1, 0], [1, 1, 0, -1]]);
        assert_eq!(l.basis(), ex4.basis());
        assert!(degree_bound_exists(&[r(2, 1), r(3, 1), r(4, 1), r(6, 1)]).unwrap());
    }

    #[test]
    fn degree_bound_examples() {
        assert!(degree_bound_exists(&[r(2, 1), r(3, 1)]).unwrap());
        assert!(!degree_bound_exists(&[r(2, 1), r(1, 2)]).unwrap());
    }

    #[test]
    fn uncancellable_examples() {
        for d in 0..6 {
            let full = (d + 1) * (d + 2) / 2;
            assert_eq!(uncancellable_term_count(&[r(2, 1), r(3, 1)], d).unwrap(), full);
        }
        assert_eq!(uncancellable_term_count(&[r(2, 1), r(1, 2)], 5).unwrap(), 4);
        assert_eq!(uncancellable_term_count(&[r(4, 1), r(8, 1)], 5).unwrap(), 9);
    }
}
