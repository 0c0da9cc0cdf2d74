use thiserror::Error;

/// Errors for measure computations and distribution construction.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("probability out of range [0, 1]: {0}")]
    ProbabilityOutOfRange(f64),

    #[error("distribution needs at least one entry")]
    EmptyDistribution,

    #[error("distribution entries sum to {sum}, expected 1 within {tolerance}")]
    NotNormalized { sum: f64, tolerance: f64 },

    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("domain error: {0}")]
    Domain(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;
