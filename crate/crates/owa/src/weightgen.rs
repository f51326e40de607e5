//! Weight vectors generated from RIM quantifiers: the direct construction
//! `wᵢ = Q(i/n) − Q((i−1)/n)`, its dual, and the importance-weighted (WOWA)
//! forms evaluated at partial sums of a probability vector.

use crate::aggregation::{ArgumentVector, WeightVector};
use crate::error::{OwaError, Result};
use crate::quantifier::Quantifier;

/// Slack accepted on individual probabilities at construction.
const PROB_TOLERANCE: f64 = 1e-12;
/// Slack accepted on the probability sum at construction.
const PROB_SUM_TOLERANCE: f64 = 1e-9;
/// Quantifier increments this far below zero are rounding and get clamped;
/// anything worse means the evaluator is not monotone and is an error.
const NEGATIVE_WEIGHT_TOLERANCE: f64 = 1e-12;

/// Importance weights over argument sources: nonnegative, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityVector {
    probs: Vec<f64>,
}

impl ProbabilityVector {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(OwaError::Validation(
                "probability vector must have at least one entry".into(),
            ));
        }
        let mut snapped = probs;
        for (i, p) in snapped.iter_mut().enumerate() {
            if !p.is_finite() {
                return Err(OwaError::Validation(format!(
                    "probability {} is not finite: {p}",
                    i + 1
                )));
            }
            if *p < 0.0 {
                if *p < -PROB_TOLERANCE {
                    return Err(OwaError::Validation(format!(
                        "probability {} is negative: {p}",
                        i + 1
                    )));
                }
                *p = 0.0;
            }
        }
        let sum: f64 = snapped.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOLERANCE {
            return Err(OwaError::Validation(format!(
                "probabilities must sum to 1, got {sum}"
            )));
        }
        Ok(Self { probs: snapped })
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(OwaError::Validation(
                "probability vector must have at least one entry".into(),
            ));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
        })
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.probs
    }

    /// Partial sums `S₀ = 0, S₁, …, Sₙ`, accumulated once left to right.
    /// Values are clamped into `[0, 1]` and the final sum is pinned to 1
    /// (the total is within tolerance by construction), so weights built
    /// from them telescope to exactly one.
    fn partial_sums(&self) -> Vec<f64> {
        let n = self.probs.len();
        let mut sums = Vec::with_capacity(n + 1);
        sums.push(0.0);
        let mut acc = 0.0;
        for &p in &self.probs {
            acc += p;
            sums.push(acc.clamp(0.0, 1.0));
        }
        sums[n] = 1.0;
        sums
    }
}

impl AsRef<[f64]> for ProbabilityVector {
    fn as_ref(&self) -> &[f64] {
        &self.probs
    }
}

/// Turns consecutive quantifier values into weights, clamping rounding-level
/// negatives and rejecting real monotonicity violations.
fn differences(values: &[f64]) -> Result<Vec<f64>> {
    values
        .windows(2)
        .map(|pair| {
            let d = pair[1] - pair[0];
            if d >= 0.0 {
                Ok(d)
            } else if d >= -NEGATIVE_WEIGHT_TOLERANCE {
                Ok(0.0)
            } else {
                Err(OwaError::Validation(format!(
                    "quantifier produced a negative weight increment: {d}"
                )))
            }
        })
        .collect()
}

fn rank_grid(n: usize) -> Vec<f64> {
    (0..=n).map(|i| i as f64 / n as f64).collect()
}

/// Direct weights `wᵢ = Q(i/n) − Q((i−1)/n)`, `i = 1..=n`.
pub fn weights_from_quantifier(q: &Quantifier, n: usize) -> Result<WeightVector> {
    if n == 0 {
        return Err(OwaError::Validation(
            "weight generation needs n >= 1".into(),
        ));
    }
    let values = q.eval_grid(&rank_grid(n))?;
    WeightVector::new(differences(&values)?)
}

/// Dual weights `w̃ᵢ = Q(1 − (i−1)/n) − Q(1 − i/n)`, `i = 1..=n`.
///
/// The dual points `1 − i/n` are the same rank grid `{i/n}` read backwards,
/// so the result is exactly the reversal of [`weights_from_quantifier`].
pub fn dual_weights_from_quantifier(q: &Quantifier, n: usize) -> Result<WeightVector> {
    if n == 0 {
        return Err(OwaError::Validation(
            "weight generation needs n >= 1".into(),
        ));
    }
    let values = q.eval_grid(&rank_grid(n))?;
    let mut weights = differences(&values)?;
    weights.reverse();
    WeightVector::new(weights)
}

/// WOWA weights `qᵢ = Q(Sᵢ) − Q(Sᵢ₋₁)` at the partial sums of `p`. Reduces
/// to [`weights_from_quantifier`] when `p` is uniform.
pub fn wowa_weights(q: &Quantifier, p: &ProbabilityVector) -> Result<WeightVector> {
    let values = q.eval_grid(&p.partial_sums())?;
    WeightVector::new(differences(&values)?)
}

/// Dual WOWA weights `q̃ᵢ = Q(1 − Sᵢ₋₁) − Q(1 − Sᵢ)`.
pub fn dual_wowa_weights(q: &Quantifier, p: &ProbabilityVector) -> Result<WeightVector> {
    let values = q.eval_grid(&dual_points(&p.partial_sums()))?;
    let mut weights = differences(&values)?;
    weights.reverse();
    WeightVector::new(weights)
}

/// `1 − Sᵢ` for the partial sums, reordered to ascend.
fn dual_points(sums: &[f64]) -> Vec<f64> {
    sums.iter().rev().map(|s| 1.0 - s).collect()
}

/// Dual WOWA aggregation in the telescoped form
/// `a₍₁₎ + Σᵢ₌₂ⁿ Q(1 − Sᵢ₋₁)·(a₍ᵢ₎ − a₍ᵢ₋₁₎)`.
///
/// Algebraically identical to aggregating with [`dual_wowa_weights`]; the two
/// routes agree to rounding.
pub fn dual_wowa_aggregate(
    q: &Quantifier,
    p: &ProbabilityVector,
    args: &ArgumentVector,
) -> Result<f64> {
    let n = p.len();
    if args.len() != n {
        return Err(OwaError::DimensionMismatch {
            expected: n,
            actual: args.len(),
        });
    }
    let sorted = args.sorted_descending();
    if n == 1 {
        return Ok(sorted[0]);
    }
    let sums = p.partial_sums();
    // Q at the interior dual points 1 − S₁ … 1 − Sₙ₋₁, ascending.
    let points: Vec<f64> = (1..n).rev().map(|i| 1.0 - sums[i]).collect();
    let qvals = q.eval_grid(&points)?;
    let mut acc = sorted[0];
    for i in 2..=n {
        // points[n − i] = 1 − S_{i−1}
        acc += qvals[n - i] * (sorted[i - 1] - sorted[i - 2]);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aggregation::owa_aggregate;
    use approx::assert_abs_diff_eq;

    fn assert_weights(w: &WeightVector, expected: &[f64], eps: f64) {
        assert_eq!(w.len(), expected.len());
        for (a, b) in w.as_slice().iter().zip(expected) {
            assert_abs_diff_eq!(*a, *b, epsilon = eps);
        }
    }

    #[test]
    fn identity_gives_uniform_weights() {
        let w = weights_from_quantifier(&Quantifier::identity(), 5).unwrap();
        assert_weights(&w, &[0.2; 5], 1e-15);
        let wd = dual_weights_from_quantifier(&Quantifier::identity(), 5).unwrap();
        assert_weights(&wd, &[0.2; 5], 1e-15);
    }

    #[test]
    fn all_selects_the_minimum() {
        let w = weights_from_quantifier(&Quantifier::all(), 4).unwrap();
        assert_eq!(w.as_slice(), &[0.0, 0.0, 0.0, 1.0]);
    }

    #[test]
    fn power_two_weights() {
        let w = weights_from_quantifier(&Quantifier::power(2.0).unwrap(), 4).unwrap();
        assert_weights(&w, &[1.0 / 16.0, 3.0 / 16.0, 5.0 / 16.0, 7.0 / 16.0], 1e-15);
        let wd = dual_weights_from_quantifier(&Quantifier::power(2.0).unwrap(), 4).unwrap();
        assert_weights(
            &wd,
            &[7.0 / 16.0, 5.0 / 16.0, 3.0 / 16.0, 1.0 / 16.0],
            1e-15,
        );
    }

    #[test]
    fn dual_is_exactly_the_reversal() {
        let quantifiers = [
            Quantifier::identity(),
            Quantifier::all(),
            Quantifier::exists(),
            Quantifier::power(2.7).unwrap(),
            Quantifier::threshold_step(0.4).unwrap(),
            Quantifier::trimmed_linear(0.15, 0.85).unwrap(),
        ];
        for q in &quantifiers {
            for n in 1..=9 {
                let w = weights_from_quantifier(q, n).unwrap();
                let wd = dual_weights_from_quantifier(q, n).unwrap();
                assert_eq!(wd, w.dual(), "n = {n}");
            }
        }
    }

    #[test]
    fn wowa_with_identity_returns_p() {
        let p = ProbabilityVector::new(vec![0.5, 0.3, 0.2]).unwrap();
        let w = wowa_weights(&Quantifier::identity(), &p).unwrap();
        assert_weights(&w, &[0.5, 0.3, 0.2], 1e-12);
        let wd = dual_wowa_weights(&Quantifier::identity(), &p).unwrap();
        assert_weights(&wd, &[0.5, 0.3, 0.2], 1e-12);
    }

    #[test]
    fn wowa_power_two_examples() {
        let q = Quantifier::power(2.0).unwrap();
        let p = ProbabilityVector::new(vec![0.5, 0.5]).unwrap();
        let w = wowa_weights(&q, &p).unwrap();
        assert_weights(&w, &[0.25, 0.75], 1e-15);
        let wd = dual_wowa_weights(&q, &p).unwrap();
        assert_weights(&wd, &[0.75, 0.25], 1e-15);
    }

    #[test]
    fn wowa_uniform_p_matches_rank_weights() {
        let q = Quantifier::power(2.0).unwrap();
        let p = ProbabilityVector::uniform(4).unwrap();
        let w = wowa_weights(&q, &p).unwrap();
        assert_weights(&w, &[1.0 / 16.0, 3.0 / 16.0, 5.0 / 16.0, 7.0 / 16.0], 1e-12);
        let wd = dual_wowa_weights(&q, &p).unwrap();
        let expected = dual_weights_from_quantifier(&q, 4).unwrap();
        assert_weights(&wd, expected.as_slice(), 1e-12);
    }

    #[test]
    fn dual_wowa_aggregate_examples() {
        // uniform p + identity = arithmetic mean
        let args = ArgumentVector::new(vec![1.0, 2.0, 3.0]).unwrap();
        let p = ProbabilityVector::uniform(3).unwrap();
        let v = dual_wowa_aggregate(&Quantifier::identity(), &p, &args).unwrap();
        assert_abs_diff_eq!(v, 2.0, epsilon = 1e-14);

        // 0.75·0.8 + 0.25·0.2
        let q = Quantifier::power(2.0).unwrap();
        let p2 = ProbabilityVector::new(vec![0.5, 0.5]).unwrap();
        let a2 = ArgumentVector::new(vec![0.2, 0.8]).unwrap();
        assert_abs_diff_eq!(
            dual_wowa_aggregate(&q, &p2, &a2).unwrap(),
            0.65,
            epsilon = 1e-14
        );

        // idempotency
        let c = ArgumentVector::new(vec![0.7, 0.7, 0.7]).unwrap();
        assert_abs_diff_eq!(
            dual_wowa_aggregate(&q, &p, &c).unwrap(),
            0.7,
            epsilon = 1e-14
        );
    }

    #[test]
    fn telescoped_form_matches_weight_form() {
        let q = Quantifier::power(3.0).unwrap();
        let p = ProbabilityVector::new(vec![0.1, 0.4, 0.2, 0.3]).unwrap();
        let args = ArgumentVector::new(vec![0.9, 0.1, 0.5, 0.7]).unwrap();
        let telescoped = dual_wowa_aggregate(&q, &p, &args).unwrap();
        let weights = dual_wowa_weights(&q, &p).unwrap();
        let direct = owa_aggregate(&args, &weights).unwrap();
        assert_abs_diff_eq!(telescoped, direct, epsilon = 1e-12);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let p = ProbabilityVector::uniform(3).unwrap();
        let args = ArgumentVector::new(vec![1.0, 2.0]).unwrap();
        assert!(matches!(
            dual_wowa_aggregate(&Quantifier::identity(), &p, &args),
            Err(OwaError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn probability_vector_validation() {
        assert!(ProbabilityVector::new(vec![]).is_err());
        assert!(ProbabilityVector::new(vec![0.6, 0.6]).is_err());
        assert!(ProbabilityVector::new(vec![-0.2, 1.2]).is_err());
        assert!(ProbabilityVector::new(vec![0.0, 1.0]).is_ok());
        // rounding-level negatives are snapped to zero
        let p = ProbabilityVector::new(vec![-1e-13, 1.0]).unwrap();
        assert_eq!(p.as_slice()[0], 0.0);
    }

    #[test]
    fn zero_probability_entries_are_fine() {
        let q = Quantifier::power(2.0).unwrap();
        let p = ProbabilityVector::new(vec![0.0, 0.5, 0.0, 0.5]).unwrap();
        let w = wowa_weights(&q, &p).unwrap();
        assert_weights(&w, &[0.0, 0.25, 0.0, 0.75], 1e-15);
    }

    #[test]
    fn n_zero_rejected() {
        assert!(weights_from_quantifier(&Quantifier::identity(), 0).is_err());
        assert!(dual_weights_from_quantifier(&Quantifier::identity(), 0).is_err());
    }
}
