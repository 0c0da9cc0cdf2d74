//! DLITE: an entropy-discounted least-information measure on discrete
//! probability distributions.
//!
//! `DL(P, Q)` is the amount of least information `LIT(P, Q)` minus its
//! entropy discount `Δ_H(P, Q)`. It is non-negative, symmetric, bounded in
//! `[0, 1]`, and zero exactly when `P = Q`; its cube root (the *DLITE
//! distance*) additionally satisfies the triangle inequality and is a
//! metric.
//!
//! Modules:
//!
//! - [`measures`]: `lit`, `δ_h`, `dl` per probability pair and the totals
//!   per distribution pair
//! - [`baselines`]: Shannon entropy, entropy difference, KL and
//!   Jensen-Shannon divergence, for comparison
//! - [`composition`]: the equiprobable-to-certainty closed form and the
//!   sub-system / joint decomposition identities
//! - [`oracle`]: independent quadrature of the defining integrals plus
//!   randomized property searches
//!
//! ```
//! use dlite::DiscreteDistribution;
//! use dlite::measures::{dl_total, dlite_distance};
//!
//! let p = DiscreteDistribution::new(vec![0.5, 0.5])?;
//! let q = DiscreteDistribution::new(vec![1.0, 0.0])?;
//! let report = dl_total(&p, &q)?;
//! assert!((report.dl_total - 0.26895093981335155).abs() < 1e-12);
//! assert_eq!(dlite_distance(&p, &q)?, report.dl_total.cbrt());
//! # Ok::<(), dlite::Error>(())
//! ```

pub mod baselines;
pub mod composition;
pub mod distribution;
mod error;
pub mod measures;
pub mod oracle;

pub use distribution::{DiscreteDistribution, Probability, SUM_TOLERANCE};
pub use error::{Error, Result};
pub use measures::{InferenceMeasures, MeasureReport};
