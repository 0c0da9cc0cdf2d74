//! Least information, its entropy discount, and the discounted measure.
//!
//! For a probability change from `p` to `q`:
//!
//! - `lit(p, q)  = |p(1 - ln p) - q(1 - ln q)|`, the integral of `-ln t`
//!   over `[p, q]`
//! - `δ_h(p, q) = |p²(1 - 2 ln p) - q²(1 - 2 ln q)| / (2(p + q))`
//! - `dl(p, q)  = lit(p, q) - δ_h(p, q)`, in `[0, 0.5]`
//!
//! with the conventions `x ln x := 0` and `x² ln x := 0` at `x = 0`, and
//! `δ_h(0, 0) := 0` (the limit along `p = q`). Summing over the inferences
//! of a distribution pair gives `LIT`, `Δ_H`, and `DL`; `DL` is symmetric,
//! bounded in `[0, 1]`, and zero exactly when the distributions are equal.
//! Its cube root, the DLITE distance, additionally satisfies the triangle
//! inequality and is therefore a metric.

use crate::distribution::{ensure_same_dim, DiscreteDistribution, Probability};
use crate::error::Result;

/// Analytically `dl ≥ 0`, but when `p ≈ q` the subtraction can leave a
/// rounding residual just below zero. Residuals in `[-NEGATIVE_CLAMP, 0)`
/// are clamped to 0; anything lower is an implementation bug.
pub const NEGATIVE_CLAMP: f64 = 1e-12;

/// `x(1 - ln x)`, the antiderivative of `-ln x`, with `x ln x := 0` at 0.
#[inline]
pub(crate) fn neg_log_antiderivative(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * (1.0 - x.ln())
    }
}

/// `x²(1 - 2 ln x)`, four times the antiderivative of `-x ln x`, with
/// `x² ln x := 0` at 0.
#[inline]
pub(crate) fn weighted_neg_log_antiderivative(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x * (1.0 - 2.0 * x.ln())
    }
}

#[inline]
pub(crate) fn lit_pair_unchecked(p: f64, q: f64) -> f64 {
    (neg_log_antiderivative(p) - neg_log_antiderivative(q)).abs()
}

#[inline]
pub(crate) fn delta_h_pair_unchecked(p: f64, q: f64) -> f64 {
    if p == 0.0 && q == 0.0 {
        // The formula is 0/0 here; the limit along p = q is 0.
        return 0.0;
    }
    (weighted_neg_log_antiderivative(p) - weighted_neg_log_antiderivative(q)).abs()
        / (2.0 * (p + q))
}

#[inline]
pub(crate) fn dl_pair_unchecked(p: f64, q: f64) -> f64 {
    let value = lit_pair_unchecked(p, q) - delta_h_pair_unchecked(p, q);
    assert!(
        value >= -NEGATIVE_CLAMP,
        "dl({p}, {q}) = {value} is negative beyond the cancellation clamp"
    );
    value.max(0.0)
}

/// Sum of `dl` over paired entries. Callers guarantee equal lengths.
pub(crate) fn dl_sum_unchecked(p: &[f64], q: &[f64]) -> f64 {
    debug_assert_eq!(p.len(), q.len());
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| dl_pair_unchecked(pi, qi))
        .sum()
}

/// Least information for one probability change. Symmetric in `(p, q)`.
pub fn lit_pair(p: f64, q: f64) -> Result<f64> {
    Probability::new(p)?;
    Probability::new(q)?;
    Ok(lit_pair_unchecked(p, q))
}

/// Entropy discount for one probability change. Symmetric in `(p, q)`.
pub fn delta_h_pair(p: f64, q: f64) -> Result<f64> {
    Probability::new(p)?;
    Probability::new(q)?;
    Ok(delta_h_pair_unchecked(p, q))
}

/// Discounted least information for one probability change: `lit - δ_h`,
/// in `[0, 0.5]` with the maximum at `(0, 1)`. Symmetric in `(p, q)`.
pub fn dl_pair(p: f64, q: f64) -> Result<f64> {
    Probability::new(p)?;
    Probability::new(q)?;
    Ok(dl_pair_unchecked(p, q))
}

/// Per-inference values for one entry of a distribution pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InferenceMeasures {
    pub lit: f64,
    pub delta_h: f64,
    pub dl: f64,
}

/// Per-inference and total measures for a distribution pair.
///
/// Totals are the exact sums of the per-inference values;
/// `dlite_distance` is the cube root of `dl_total`.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureReport {
    pub per_inference: Vec<InferenceMeasures>,
    pub lit_total: f64,
    pub delta_h_total: f64,
    pub dl_total: f64,
    pub dlite_distance: f64,
}

/// `DL(P, Q) = Σ dl(p_x, q_x)` with the per-inference breakdown.
///
/// `dl_total` lies in `[0, 1]`, is symmetric, and is zero exactly when the
/// distributions are equal elementwise.
pub fn dl_total(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<MeasureReport> {
    ensure_same_dim(p, q)?;
    let mut per_inference = Vec::with_capacity(p.dim());
    let (mut lit_total, mut delta_h_total, mut dl_total) = (0.0, 0.0, 0.0);
    for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
        let m = InferenceMeasures {
            lit: lit_pair_unchecked(pi, qi),
            delta_h: delta_h_pair_unchecked(pi, qi),
            dl: dl_pair_unchecked(pi, qi),
        };
        lit_total += m.lit;
        delta_h_total += m.delta_h;
        dl_total += m.dl;
        per_inference.push(m);
    }
    Ok(MeasureReport {
        per_inference,
        lit_total,
        delta_h_total,
        dl_total,
        dlite_distance: dl_total.cbrt(),
    })
}

/// The DLITE distance `DL(P, Q)^(1/3)`: the metric induced by `dl_total`.
pub fn dlite_distance(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    ensure_same_dim(p, q)?;
    Ok(dl_sum_unchecked(p.probs(), q.probs()).cbrt())
}
