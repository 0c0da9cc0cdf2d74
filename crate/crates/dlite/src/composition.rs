//! Structural behaviour of `DL`: the equiprobable-to-certainty closed form,
//! sub-system weighted sums, and joint-distribution constructions.
//!
//! These lean on the scaling identity `dl(xp, xq) = x·dl(p, q)`: scaling all
//! inner probabilities by an outer weight scales their `dl` contribution by
//! the same factor, so a combined system decomposes into a weighted sum of
//! per-subsystem amounts.

use crate::distribution::DiscreteDistribution;
use crate::error::{Error, Result};
use crate::measures::dl_sum_unchecked;

fn closed_form_at(m: f64) -> f64 {
    (1.0 / (m * (m + 1.0)) - 1.0 / m) * m.ln()
        + (1.0 / m - m) / (2.0 * (m + 1.0))
        + 3.0 * (m - 1.0) / (2.0 * m)
}

/// `DL` of reducing `m` equiprobable inferences to certainty:
///
/// `DL(m) = (1/(m(m+1)) - 1/m)·ln m + (1/m - m)/(2(m+1)) + 3(m-1)/(2m)`
///
/// Strictly increasing in `m` and approaching 1 as `m → ∞`. Equals
/// `dl_total(equiprobable(m), certainty(m))` by direct summation.
pub fn closed_form_equiprobable(m: u64) -> Result<f64> {
    if m < 2 {
        return Err(Error::Domain("equiprobable closed form needs m >= 2"));
    }
    Ok(closed_form_at(m as f64))
}

/// Derivative of the closed form, `DL'(m) = (m² ln m + m + 1) / (m²(m+1)²)`.
///
/// Accepts real `m ≥ 2` since the quantity is continuous in `m`. Always
/// positive, decreasing, and vanishing as `m → ∞`.
pub fn closed_form_equiprobable_derivative(m: f64) -> Result<f64> {
    if !(m >= 2.0) {
        return Err(Error::Domain("equiprobable closed form needs m >= 2"));
    }
    Ok((m * m * m.ln() + m + 1.0) / (m * m * (m + 1.0) * (m + 1.0)))
}

/// An outer distribution over `X` plus, per outer inference, a `(P_x, Q_x)`
/// pair of inner distributions. The outer distribution is shared by both
/// sides; inner dimensions may differ across `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct SubsystemSpec {
    outer: DiscreteDistribution,
    inner_pairs: Vec<(DiscreteDistribution, DiscreteDistribution)>,
}

impl SubsystemSpec {
    pub fn new(
        outer: DiscreteDistribution,
        inner_pairs: Vec<(DiscreteDistribution, DiscreteDistribution)>,
    ) -> Result<Self> {
        if inner_pairs.len() != outer.dim() {
            return Err(Error::DimensionMismatch(inner_pairs.len(), outer.dim()));
        }
        for (p, q) in &inner_pairs {
            if p.dim() != q.dim() {
                return Err(Error::DimensionMismatch(p.dim(), q.dim()));
            }
        }
        Ok(Self { outer, inner_pairs })
    }

    pub fn outer(&self) -> &DiscreteDistribution {
        &self.outer
    }

    pub fn inner_pairs(&self) -> &[(DiscreteDistribution, DiscreteDistribution)] {
        &self.inner_pairs
    }
}

/// Flatten a subsystem spec into one `(P, Q)` pair over all inner inferences,
/// entry `p_x·p_s`, ordered outer-index major.
pub fn combine_subsystems(
    spec: &SubsystemSpec,
) -> Result<(DiscreteDistribution, DiscreteDistribution)> {
    let total: usize = spec.inner_pairs.iter().map(|(p, _)| p.dim()).sum();
    let mut combined_p = Vec::with_capacity(total);
    let mut combined_q = Vec::with_capacity(total);
    for (&weight, (inner_p, inner_q)) in spec.outer.probs().iter().zip(&spec.inner_pairs) {
        combined_p.extend(inner_p.probs().iter().map(|&s| weight * s));
        combined_q.extend(inner_q.probs().iter().map(|&s| weight * s));
    }
    Ok((
        DiscreteDistribution::new(combined_p)?,
        DiscreteDistribution::new(combined_q)?,
    ))
}

/// `Σ_x p_x · DL(P_x, Q_x)`: the weighted sum of per-subsystem amounts.
///
/// Equals `dl_total` over the flattened [`combine_subsystems`] pair.
pub fn weighted_subsystem_dl(spec: &SubsystemSpec) -> f64 {
    spec.outer
        .probs()
        .iter()
        .zip(&spec.inner_pairs)
        .map(|(&weight, (p, q))| weight * dl_sum_unchecked(p.probs(), q.probs()))
        .sum()
}

/// Joint distribution of independent variables: entry `p_x·p_y`, row-major
/// with `x` as the outer index.
pub fn joint_independent(
    px: &DiscreteDistribution,
    py: &DiscreteDistribution,
) -> Result<DiscreteDistribution> {
    let mut joint = Vec::with_capacity(px.dim() * py.dim());
    for &x in px.probs() {
        joint.extend(py.probs().iter().map(|&y| x * y));
    }
    DiscreteDistribution::new(joint)
}

/// A marginal over `X` plus one conditional distribution over `Y` per `x`
/// (the rows of `P_{Y|X}`). All rows share the same dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct ConditionalSpec {
    marginal: DiscreteDistribution,
    conditionals: Vec<DiscreteDistribution>,
}

impl ConditionalSpec {
    pub fn new(
        marginal: DiscreteDistribution,
        conditionals: Vec<DiscreteDistribution>,
    ) -> Result<Self> {
        if conditionals.len() != marginal.dim() {
            return Err(Error::DimensionMismatch(conditionals.len(), marginal.dim()));
        }
        if let Some(first) = conditionals.first() {
            for row in &conditionals {
                if row.dim() != first.dim() {
                    return Err(Error::DimensionMismatch(row.dim(), first.dim()));
                }
            }
        }
        Ok(Self {
            marginal,
            conditionals,
        })
    }

    pub fn marginal(&self) -> &DiscreteDistribution {
        &self.marginal
    }

    pub fn conditionals(&self) -> &[DiscreteDistribution] {
        &self.conditionals
    }
}

/// Joint distribution of dependent variables: entry `p_x·p_{y|x}`, row-major
/// with `x` as the outer index.
pub fn joint_conditional(spec: &ConditionalSpec) -> Result<DiscreteDistribution> {
    let dim_y = spec.conditionals.first().map_or(0, |row| row.dim());
    let mut joint = Vec::with_capacity(spec.marginal.dim() * dim_y);
    for (&x, row) in spec.marginal.probs().iter().zip(&spec.conditionals) {
        joint.extend(row.probs().iter().map(|&y| x * y));
    }
    DiscreteDistribution::new(joint)
}
