use std::fmt;
use std::iter::Sum;
use std::ops::Add;

/// A number of lonely points: a natural number or infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LonelyCount {
    Finite(u64),
    Infinite,
}

impl LonelyCount {
    pub fn is_infinite(&self) -> bool {
        matches!(self, LonelyCount::Infinite)
    }

    pub fn finite(&self) -> Option<u64> {
        match self {
            LonelyCount::Finite(n) => Some(*n),
            LonelyCount::Infinite => None,
        }
    }
}

// infinity absorbs
impl Add for LonelyCount {
    type Output = LonelyCount;

    fn add(self, rhs: LonelyCount) -> LonelyCount {
        match (self, rhs) {
            (LonelyCount::Finite(a), LonelyCount::Finite(b)) => LonelyCount::Finite(a + b),
            _ => LonelyCount::Infinite,
        }
    }
}

impl Sum for LonelyCount {
    fn sum<I: Iterator<Item = LonelyCount>>(iter: I) -> Self {
        iter.fold(LonelyCount::Finite(0), Add::add)
    }
}

impl fmt::Display for LonelyCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LonelyCount::Finite(n) => write!(f, "{n}"),
            LonelyCount::Infinite => write!(f, "infinity"),
        }
    }
}
