//! Probability scalars and validated discrete distributions.

use crate::error::{Error, Result};

/// Tolerance on `Σp = 1` at construction. Inputs further off are rejected,
/// never silently renormalized: a caller error should surface, not be masked.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A probability, guaranteed to lie in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Probability(f64);

impl Probability {
    pub fn new(value: f64) -> Result<Self> {
        // NaN fails both comparisons and is rejected here too.
        if value >= 0.0 && value <= 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::ProbabilityOutOfRange(value))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Probability {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// A discrete probability distribution over `dim ≥ 1` mutually exclusive
/// inferences: every entry in `[0, 1]`, entries summing to 1 within
/// [`SUM_TOLERANCE`]. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteDistribution {
    probs: Vec<f64>,
}

impl DiscreteDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyDistribution);
        }
        for &p in &probs {
            Probability::new(p)?;
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::NotNormalized {
                sum,
                tolerance: SUM_TOLERANCE,
            });
        }
        Ok(Self { probs })
    }

    /// All mass on the first inference: `(1, 0, ..., 0)`.
    ///
    /// Panics if `dim == 0`.
    pub fn certainty(dim: usize) -> Self {
        assert!(dim >= 1, "certainty distribution needs dim >= 1");
        let mut probs = vec![0.0; dim];
        probs[0] = 1.0;
        Self { probs }
    }

    /// Uniform mass `1/dim` on every inference.
    ///
    /// Panics if `dim == 0`.
    pub fn equiprobable(dim: usize) -> Self {
        assert!(dim >= 1, "equiprobable distribution needs dim >= 1");
        Self {
            probs: vec![1.0 / dim as f64; dim],
        }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn dim(&self) -> usize {
        self.probs.len()
    }
}

impl AsRef<[f64]> for DiscreteDistribution {
    fn as_ref(&self) -> &[f64] {
        &self.probs
    }
}

pub(crate) fn ensure_same_dim(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<()> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch(p.dim(), q.dim()));
    }
    Ok(())
}
