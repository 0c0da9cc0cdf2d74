//! Classic information measures used for comparison: Shannon entropy,
//! entropy difference, KL divergence, and Jensen-Shannon divergence.
//!
//! Everything here uses the natural logarithm so values are directly
//! comparable with the `dl` measures (JS is then bounded by `ln 2`).

use crate::distribution::{ensure_same_dim, DiscreteDistribution};
use crate::error::Result;

fn entropy_of(probs: &[f64]) -> f64 {
    probs
        .iter()
        .map(|&p| if p > 0.0 { -p * p.ln() } else { 0.0 })
        .sum()
}

/// Shannon entropy `H(P) = -Σ p ln p` in nats, with `0 ln 0 := 0`.
///
/// Zero exactly for a certainty distribution.
pub fn shannon_entropy(p: &DiscreteDistribution) -> f64 {
    entropy_of(p.probs())
}

/// Signed entropy difference `H(P) - H(Q)`.
///
/// This is the "entropy reduction" reading of Shannon's measure between two
/// distributions; it is zero whenever probabilities are merely permuted.
pub fn entropy_delta(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    ensure_same_dim(p, q)?;
    Ok(shannon_entropy(p) - shannon_entropy(q))
}

/// Directed KL divergence `KL(P‖Q) = Σ p ln(p/q)` in nats, with
/// `0 ln(0/q) := 0`. Returns `+∞` when some `p_i > 0` has `q_i = 0`.
pub fn kl_divergence(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    ensure_same_dim(p, q)?;
    let mut acc = 0.0;
    for (&pi, &qi) in p.probs().iter().zip(q.probs()) {
        if pi == 0.0 {
            continue;
        }
        if qi == 0.0 {
            return Ok(f64::INFINITY);
        }
        acc += pi * (pi / qi).ln();
    }
    Ok(acc)
}

/// Jensen-Shannon divergence `JS(P, Q) = H(M) - (H(P) + H(Q))/2` with
/// `M = (P + Q)/2`. Symmetric and bounded by `ln 2`; its square root is a
/// metric.
pub fn js_divergence(p: &DiscreteDistribution, q: &DiscreteDistribution) -> Result<f64> {
    ensure_same_dim(p, q)?;
    let mixture: Vec<f64> = p
        .probs()
        .iter()
        .zip(q.probs())
        .map(|(&pi, &qi)| 0.5 * (pi + qi))
        .collect();
    Ok(entropy_of(&mixture) - 0.5 * (shannon_entropy(p) + shannon_entropy(q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;
    use std::f64::consts::LN_2;

    fn dist(probs: &[f64]) -> DiscreteDistribution {
        DiscreteDistribution::new(probs.to_vec()).unwrap()
    }

    fn simplex(len: usize) -> impl Strategy<Value = DiscreteDistribution> {
        prop::collection::vec(1e-9f64..1.0, len).prop_map(|v| {
            let s: f64 = v.iter().sum();
            dist(&v.iter().map(|x| x / s).collect::<Vec<_>>())
        })
    }

    #[test]
    fn entropy_examples() {
        assert_eq!(shannon_entropy(&dist(&[1.0, 0.0])), 0.0);
        assert!((shannon_entropy(&dist(&[0.5, 0.5])) - LN_2).abs() < 1e-15);
        let third = 1.0 / 3.0;
        let h = shannon_entropy(&dist(&[third, third, third]));
        assert!((h - 3.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn entropy_delta_examples() {
        let p = dist(&[0.5, 0.5]);
        let q = dist(&[1.0, 0.0]);
        assert!((entropy_delta(&p, &q).unwrap() - LN_2).abs() < 1e-15);
        assert_eq!(entropy_delta(&p, &p).unwrap(), 0.0);
        // Swapped probabilities carry the same entropy.
        let a = dist(&[0.3, 0.7]);
        let b = dist(&[0.7, 0.3]);
        assert_eq!(entropy_delta(&a, &b).unwrap(), 0.0);
        // Signed: the reverse direction is negative.
        assert!(entropy_delta(&q, &p).unwrap() < 0.0);
    }

    #[test]
    fn kl_examples() {
        let p = dist(&[0.25, 0.75]);
        let q = dist(&[0.5, 0.5]);
        assert_eq!(kl_divergence(&p, &p).unwrap(), 0.0);
        let expected = 0.25 * (0.25f64 / 0.5).ln() + 0.75 * (0.75f64 / 0.5).ln();
        assert!((kl_divergence(&p, &q).unwrap() - expected).abs() < 1e-15);
        assert_eq!(
            kl_divergence(&dist(&[0.5, 0.5]), &dist(&[1.0, 0.0])).unwrap(),
            f64::INFINITY
        );
    }

    #[test]
    fn kl_is_asymmetric() {
        let p = dist(&[0.25, 0.75]);
        let q = dist(&[0.5, 0.5]);
        let pq = kl_divergence(&p, &q).unwrap();
        let qp = kl_divergence(&q, &p).unwrap();
        assert!((pq - qp).abs() > 1e-3, "KL({pq}) vs reverse ({qp})");
    }

    #[test]
    fn js_examples() {
        let p = dist(&[0.5, 0.5]);
        let q = dist(&[1.0, 0.0]);
        assert_eq!(js_divergence(&p, &p).unwrap(), 0.0);
        assert!((js_divergence(&dist(&[0.0, 1.0]), &dist(&[1.0, 0.0])).unwrap() - LN_2).abs() < 1e-15);
        // H((0.75, 0.25)) - ln(2)/2, evaluated directly.
        let expected = -(0.75f64 * 0.75f64.ln() + 0.25 * 0.25f64.ln()) - LN_2 / 2.0;
        assert!((js_divergence(&p, &q).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let p = dist(&[0.5, 0.5]);
        let q = dist(&[0.2, 0.3, 0.5]);
        for f in [entropy_delta, kl_divergence, js_divergence] {
            assert_eq!(f(&p, &q).unwrap_err(), Error::DimensionMismatch(2, 3));
        }
    }

    proptest! {
        #[test]
        fn js_is_symmetric_and_bounded(p in simplex(6), q in simplex(6)) {
            let pq = js_divergence(&p, &q).unwrap();
            let qp = js_divergence(&q, &p).unwrap();
            prop_assert!((pq - qp).abs() < 1e-15);
            prop_assert!(pq >= -1e-15);
            prop_assert!(pq <= LN_2 + 1e-12);
        }

        #[test]
        fn kl_self_is_zero_and_nonnegative(p in simplex(5), q in simplex(5)) {
            prop_assert_eq!(kl_divergence(&p, &p).unwrap(), 0.0);
            prop_assert!(kl_divergence(&p, &q).unwrap() >= -1e-12);
        }

        #[test]
        fn js_square_root_obeys_triangle_inequality(
            p in simplex(4),
            q in simplex(4),
            r in simplex(4),
        ) {
            // Mirror of the cube-root test for dl: sqrt(JS) is a metric.
            let d = |a: &DiscreteDistribution, b: &DiscreteDistribution| {
                js_divergence(a, b).unwrap().max(0.0).sqrt()
            };
            prop_assert!(d(&p, &q) + d(&q, &r) >= d(&p, &r) - 1e-12);
        }
    }
}
