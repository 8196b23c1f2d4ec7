use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (valid range {min}..={max})")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("cone generator {0} is the zero vector")]
    ZeroGenerator(usize),

    #[error("cone generators are linearly dependent over the rationals")]
    DependentGenerators,

    #[error("point {0:?} does not lie in the cone")]
    NotInCone(Vec<String>),

    #[error("the cone has infinitely many lonely points")]
    InfiniteCount,

    #[error("exponential base must be nonzero")]
    ZeroBase,

    #[error("search box of {needed} points exceeds the limit of {limit}")]
    ResourceLimit { needed: u128, limit: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
