use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::exactla::BigRat;

/// One summand `p(n)·φ^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub poly: Poly,
    pub base: BigRat,
}

/// A C-finite sequence `a_n = p_1(n)φ_1^n + ⋯ + p_m(n)φ_m^n` with rational
/// bases. The empty form is the zero sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalClosedForm {
    terms: Vec<Term>,
}

impl RationalClosedForm {
    /// Accepts any list of terms; only zero bases are rejected.
    pub fn new(terms: Vec<Term>) -> Result<Self> {
        if terms.iter().any(|t| t.base.is_zero()) {
            return Err(Error::ZeroBase);
        }
        Ok(RationalClosedForm { terms })
    }

    pub fn zero() -> Self {
        RationalClosedForm::default()
    }

    /// The constant sequence `c`.
    pub fn constant(c: BigRat) -> Self {
        RationalClosedForm {
            terms: vec![Term {
                poly: Poly::constant(c),
                base: BigRat::one(),
            }],
        }
        .normalize()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn bases(&self) -> Vec<BigRat> {
        self.terms.iter().map(|t| t.base.clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|t| t.poly.is_zero())
    }

    /// Merges equal bases, drops vanishing terms and sorts by base.
    pub fn normalize(&self) -> Self {
        let mut acc: BTreeMap<BigRat, Poly> = BTreeMap::new();
        for t in &self.terms {
            let slot = acc.entry(t.base.clone()).or_default();
            *slot = &*slot + &t.poly;
        }
        RationalClosedForm {
            terms: acc
                .into_iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(base, poly)| Term { poly, base })
                .collect(),
        }
    }

    pub fn evaluate(&self, n: u64) -> BigRat {
        let nr = BigRat::from_integer(n.into());
        self.terms
            .iter()
            .map(|t| t.poly.eval(&nr) * pow(&t.base, n))
            .fold(BigRat::zero(), |a, b| a + b)
    }

    /// Order of the minimal recurrence: `#terms + Σ deg p_i` of the
    /// normalized form.
    pub fn minimal_order(&self) -> usize {
        self.normalize()
            .terms
            .iter()
            .map(|t| t.poly.degree().map_or(0, |d| d + 1))
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                terms.push(Term {
                    poly: &a.poly * &b.poly,
                    base: &a.base * &b.base,
                });
            }
        }
        RationalClosedForm { terms }.normalize()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        RationalClosedForm { terms }.normalize()
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        RationalClosedForm {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    poly: t.poly.scale(c),
                    base: t.base.clone(),
                })
                .collect(),
        }
        .normalize()
    }

    /// `a^0, a^1, …, a^d`, each normalized.
    pub fn powers(&self, d: usize) -> Vec<Self> {
        let a = self.normalize();
        let mut out = vec![RationalClosedForm::constant(BigRat::one())];
        for k in 1..=d {
            let next = out[k - 1].mul(&a);
            out.push(next);
        }
        out
    }
}

fn pow(b: &BigRat, n: u64) -> BigRat {
    let mut acc = BigRat::one();
    for _ in 0..n {
        acc *= b;
    }
    acc
}

/// Closed form of `(q(a_n))_n`.
pub fn compose_polynomial(cf: &RationalClosedForm, q: &Poly) -> RationalClosedForm {
    let d = q.degree().unwrap_or(0);
    cf.powers(d)
        .iter()
        .enumerate()
        .fold(RationalClosedForm::zero(), |acc, (k, ak)| acc.add(&ak.scale(&q.coeff(k))))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn r(n: i64, d: i64) -> BigRat {
        BigRat::new(n.into(), d.into())
    }

    fn term(poly: &[i64], base: BigRat) -> Term {
        Term {
            poly: Poly::from_i64(poly),
            base,
        }
    }

    fn ex1_1() -> RationalClosedForm {
        RationalClosedForm::new(vec![term(&[1], r(1, 1)), term(&[1], r(2, 1)), term(&[1], r(1, 2))]).unwrap()
    }

    fn ex1_2() -> RationalClosedForm {
        RationalClosedForm::new(vec![
            term(&[1], r(1, 1)),
            term(&[1], r(3, 1)),
            term(&[1], r(9, 1)),
            term(&[2], r(27, 1)),
            term(&[-2], r(81, 1)),
        ])
        .unwrap()
    }

    #[test]
    fn normalize_examples() {
        let cf = RationalClosedForm::new(vec![term(&[1], r(2, 1)), term(&[1], r(2, 1))]).unwrap();
        assert_eq!(cf.normalize().terms(), &[term(&[2], r(2, 1))]);
        let cf = RationalClosedForm::new(vec![term(&[0, 1], r(3, 1)), term(&[0, -1], r(3, 1))]).unwrap();
        assert!(cf.normalize().terms().is_empty());
        let n = ex1_1().normalize();
        assert_eq!(n.bases(), vec![r(1, 2), r(1, 1), r(2, 1)]);
        assert!(n.terms().iter().all(|t| t.poly == Poly::one()));
    }

    #[test]
    fn zero_base_rejected() {
        assert_eq!(RationalClosedForm::new(vec![term(&[1], r(0, 1))]), Err(Error::ZeroBase));
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(ex1_1().evaluate(2), r(21, 4));
        assert_eq!(RationalClosedForm::zero().evaluate(7), r(0, 1));
        assert_eq!(ex1_2().evaluate(0), r(3, 1));
    }

    #[test]
    fn order_examples() {
        assert_eq!(ex1_1().minimal_order(), 3);
        assert_eq!(ex1_2().minimal_order(), 5);
        let cf = RationalClosedForm::new(vec![term(&[0, 0, 1], r(1, 1))]).unwrap();
        assert_eq!(cf.minimal_order(), 3);
    }

    #[test]
    fn compose_examples() {
        let q = Poly::from_i64(&[-1, -2, 1]);
        let expected = RationalClosedForm::new(vec![term(&[1], r(4, 1)), term(&[1], r(1, 4))]).unwrap().normalize();
        assert_eq!(compose_polynomial(&ex1_1(), &q), expected);

        let q = Poly::from_i64(&[2, -3, 1]);
        let expected = RationalClosedForm::new(vec![
            term(&[-1], r(3, 1)),
            term(&[7], r(81, 1)),
            term(&[-8], r(2187, 1)),
            term(&[4], r(6561, 1)),
        ])
        .unwrap()
        .normalize();
        assert_eq!(compose_polynomial(&ex1_2(), &q), expected);

        assert_eq!(compose_polynomial(&ex1_2(), &Poly::x()), ex1_2().normalize());
    }
}
