//! OWA aggregation over rank-ordered arguments, dual weighting vectors, and
//! the scalar measures (orness, andness, dispersion) of a weighting vector.
//!
//! Weights attach to rank positions, not argument identities: the arguments
//! are sorted in descending order and the i-th weight multiplies the i-th
//! largest value.

use crate::error::{OwaError, Result};

/// Slack accepted on individual weights at construction; entries this close
/// to `[0, 1]` are snapped onto the boundary, anything worse is rejected.
pub const WEIGHT_TOLERANCE: f64 = 1e-12;
/// Slack accepted on the weight sum at construction. Renormalization is
/// never implicit.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Nonnegative weights over rank positions, summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    /// Validates and stores a weighting vector: nonempty, every entry in
    /// `[0, 1]` (within [`WEIGHT_TOLERANCE`]), sum within
    /// [`WEIGHT_SUM_TOLERANCE`] of one.
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(OwaError::Validation(
                "weight vector must have at least one entry".into(),
            ));
        }
        let mut snapped = weights;
        for (i, w) in snapped.iter_mut().enumerate() {
            if !w.is_finite() {
                return Err(OwaError::Validation(format!(
                    "weight {} is not finite: {w}",
                    i + 1
                )));
            }
            if *w < 0.0 {
                if *w < -WEIGHT_TOLERANCE {
                    return Err(OwaError::Validation(format!(
                        "weight {} is negative: {w}",
                        i + 1
                    )));
                }
                *w = 0.0;
            } else if *w > 1.0 {
                if *w > 1.0 + WEIGHT_TOLERANCE {
                    return Err(OwaError::Validation(format!(
                        "weight {} exceeds one: {w}",
                        i + 1
                    )));
                }
                *w = 1.0;
            }
        }
        let sum: f64 = snapped.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(OwaError::Validation(format!(
                "weights must sum to 1, got {sum}"
            )));
        }
        Ok(Self { weights: snapped })
    }

    /// Scales nonnegative raw values to sum to one. This is the one explicit
    /// renormalization; [`WeightVector::new`] never rescales.
    pub fn normalized(raw: Vec<f64>) -> Result<Self> {
        let total: f64 = raw.iter().sum();
        if !(total > 0.0 && total.is_finite()) {
            return Err(OwaError::Validation(format!(
                "weights cannot be normalized: total {total}"
            )));
        }
        Self::new(raw.into_iter().map(|w| w / total).collect())
    }

    /// `(1/n, …, 1/n)` — the arithmetic mean.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(OwaError::Validation(
                "weight vector must have at least one entry".into(),
            ));
        }
        Ok(Self {
            weights: vec![1.0 / n as f64; n],
        })
    }

    /// `(1, 0, …, 0)` — selects the maximum.
    pub fn maximum(n: usize) -> Result<Self> {
        let mut w = Self::minimum(n)?;
        w.weights.reverse();
        Ok(w)
    }

    /// `(0, …, 0, 1)` — selects the minimum.
    pub fn minimum(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(OwaError::Validation(
                "weight vector must have at least one entry".into(),
            ));
        }
        let mut weights = vec![0.0; n];
        weights[n - 1] = 1.0;
        Ok(Self { weights })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires at least one entry
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn get(&self, i: usize) -> Option<f64> {
        self.weights.get(i).copied()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, f64> {
        self.weights.iter()
    }

    /// The reversed vector `ŵᵢ = w₍ₙ₋ᵢ₊₁₎`; an involution.
    pub fn dual(&self) -> Self {
        let mut weights = self.weights.clone();
        weights.reverse();
        Self { weights }
    }

    /// `Σⱼ ((n−j)/(n−1))·wⱼ` in `[0, 1]`; 1 for max-selecting weights, 0 for
    /// min-selecting, 0.5 for uniform. A single-entry vector reports 0.5 —
    /// the aggregate is the lone argument, neither orlike nor andlike.
    ///
    /// Computed as a compensated dot product so the uniform and one-hot
    /// vectors come out exact.
    pub fn orness(&self) -> f64 {
        let n = self.weights.len();
        if n == 1 {
            return 0.5;
        }
        let mut sum = 0.0;
        let mut comp = 0.0;
        for (j, &w) in self.weights.iter().enumerate() {
            let coeff = (n - 1 - j) as f64;
            let prod = coeff * w;
            let prod_err = coeff.mul_add(w, -prod);
            let t = sum + prod;
            let shifted = t - sum;
            let sum_err = (sum - (t - shifted)) + (prod - shifted);
            sum = t;
            comp += sum_err + prod_err;
        }
        (sum + comp) / (n as f64 - 1.0)
    }

    /// `1 − orness`.
    pub fn andness(&self) -> f64 {
        1.0 - self.orness()
    }

    /// Shannon entropy `−Σ wᵢ ln wᵢ` (with `0·ln 0 = 0`), in `[0, ln n]`.
    pub fn dispersion(&self) -> f64 {
        self.weights
            .iter()
            .map(|&w| if w > 0.0 { -w * w.ln() } else { 0.0 })
            .sum()
    }
}

impl AsRef<[f64]> for WeightVector {
    fn as_ref(&self) -> &[f64] {
        &self.weights
    }
}

/// The values to aggregate, in source order.
#[derive(Debug, Clone, PartialEq)]
pub struct ArgumentVector {
    values: Vec<f64>,
    unit_interval: bool,
}

impl ArgumentVector {
    /// Wraps a nonempty vector of finite values.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(OwaError::Validation(
                "argument vector must have at least one entry".into(),
            ));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(OwaError::Validation(format!(
                "argument {} is not finite: {v}",
                i + 1
            )));
        }
        Ok(Self {
            values,
            unit_interval: false,
        })
    }

    /// Like [`ArgumentVector::new`] but additionally requires every value in
    /// `[0, 1]` and records the fact.
    pub fn unit_interval(values: Vec<f64>) -> Result<Self> {
        let mut args = Self::new(values)?;
        if let Some((i, v)) = args
            .values
            .iter()
            .enumerate()
            .find(|(_, v)| !(0.0..=1.0).contains(*v))
        {
            return Err(OwaError::Validation(format!(
                "argument {} is outside [0, 1]: {v}",
                i + 1
            )));
        }
        args.unit_interval = true;
        Ok(args)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn is_unit_interval(&self) -> bool {
        self.unit_interval
    }

    /// Values in descending order; the sort is stable so ties keep their
    /// source order.
    pub fn sorted_descending(&self) -> Vec<f64> {
        let mut sorted = self.values.clone();
        sorted.sort_by(|a, b| b.partial_cmp(a).expect("arguments are finite"));
        sorted
    }
}

/// `Σ wᵢ·a₍ᵢ₎` where `a₍₁₎ ≥ … ≥ a₍ₙ₎`. Lies between the minimum and
/// maximum argument.
pub fn owa_aggregate(args: &ArgumentVector, weights: &WeightVector) -> Result<f64> {
    if args.len() != weights.len() {
        return Err(OwaError::DimensionMismatch {
            expected: weights.len(),
            actual: args.len(),
        });
    }
    let sorted = args.sorted_descending();
    Ok(weights.iter().zip(&sorted).map(|(w, a)| w * a).sum())
}
