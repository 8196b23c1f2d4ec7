use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exactla::{to_rat_vec, BigRat};

/// An integer point of ℤ^m.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub Vec<BigInt>);

impl Point {
    pub fn zero(m: usize) -> Self {
        Point(vec![BigInt::zero(); m])
    }

    /// The unit vector `e_i` for `i` in `1..=m`; `e_0` is the zero vector.
    pub fn unit(m: usize, i: usize) -> Self {
        let mut p = Self::zero(m);
        if i > 0 {
            p.0[i - 1] = BigInt::from(1);
        }
        p
    }

    pub fn from_i64(xs: &[i64]) -> Self {
        Point(xs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, k: &BigInt) -> Point {
        Point(self.0.iter().map(|x| x * k).collect())
    }

    pub fn to_rational(&self) -> Vec<BigRat> {
        to_rat_vec(&self.0)
    }

    /// Coordinates as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|x| x.to_i64()).collect()
    }
}

impl From<Vec<BigInt>> for Point {
    fn from(v: Vec<BigInt>) -> Self {
        Point(v)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
