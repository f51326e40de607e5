//! Elliptical density generators and the weight constructions they induce:
//! rank-position weights, argument-value weights, and centered quantifiers
//! built from a symmetric density on the unit interval.
//!
//! A density generator is the radial profile `g(u)`, `u ≥ 0`, of an
//! elliptical density `(C/σ)·g(((x−μ)/σ)²)`. The location, scale and
//! normalizing constant cancel in every weight ratio below, so generators
//! are used unnormalized throughout.

use crate::aggregation::{ArgumentVector, WeightVector};
use crate::error::{OwaError, Result};
use crate::quantifier::Quantifier;

/// Radial profiles of the classic elliptical families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityGenerator {
    /// `1 / (1 + u)`
    Cauchy,
    /// `exp(−r·uˢ)`, `r > 0`, `s > 0`
    ExponentialPower { r: f64, s: f64 },
    /// `exp(−u)`
    Laplace,
    /// `e⁻ᵘ / (1 + e⁻ᵘ)²`
    Logistic,
    /// `exp(−u/2)`
    Normal,
    /// `(1 + u/m)^(−(m+1)/2)`, integer `m ≥ 1`; `m = 1` coincides with
    /// Cauchy. (The exponent is negative — the positive variant seen in
    /// some tables is not a density.)
    StudentT { m: u32 },
}

impl DensityGenerator {
    /// Checks the family parameters.
    pub fn validate(&self) -> Result<()> {
        match self {
            Self::ExponentialPower { r, s }
                if !(r.is_finite() && *r > 0.0 && s.is_finite() && *s > 0.0) =>
            {
                Err(OwaError::Validation(format!(
                    "exponential-power parameters must be positive, got r={r}, s={s}"
                )))
            }
            Self::StudentT { m } if *m < 1 => Err(OwaError::Validation(
                "student-t degrees of freedom must be at least 1".into(),
            )),
            _ => Ok(()),
        }
    }

    /// Generator value at `u ≥ 0`.
    pub fn eval(&self, u: f64) -> Result<f64> {
        self.validate()?;
        if u < 0.0 || u.is_nan() {
            return Err(OwaError::Domain(format!(
                "density generator argument must be nonnegative, got {u}"
            )));
        }
        Ok(self.value(u))
    }

    pub(crate) fn value(&self, u: f64) -> f64 {
        match self {
            Self::Cauchy => 1.0 / (1.0 + u),
            Self::ExponentialPower { r, s } => (-r * u.powf(*s)).exp(),
            Self::Laplace => (-u).exp(),
            Self::Logistic => {
                let e = (-u).exp();
                e / ((1.0 + e) * (1.0 + e))
            }
            Self::Normal => (-u / 2.0).exp(),
            Self::StudentT { m } => {
                let m = f64::from(*m);
                (1.0 + u / m).powf(-(m + 1.0) / 2.0)
            }
        }
    }
}

/// Mean and population variance of the rank positions `1..=n`:
/// `μₙ = (n+1)/2`, `σₙ² = (n²−1)/12`. Requires `n ≥ 1`.
pub fn position_stats(n: usize) -> (f64, f64) {
    assert!(n >= 1, "position statistics need n >= 1");
    let nf = n as f64;
    ((nf + 1.0) / 2.0, (nf * nf - 1.0) / 12.0)
}

/// Rank-position weights: the generator sampled at the squared standardized
/// positions `((i − μₙ)/σₙ)²` and normalized. Symmetric with orness 0.5,
/// peaked at the middle ranks for non-increasing generators.
pub fn position_weights(g: &DensityGenerator, n: usize) -> Result<WeightVector> {
    g.validate()?;
    if n == 0 {
        return Err(OwaError::Validation("position weights need n >= 1".into()));
    }
    if n == 1 {
        return WeightVector::new(vec![1.0]);
    }
    let (mu, sigma2) = position_stats(n);
    let sigma = sigma2.sqrt();
    let raw = (1..=n)
        .map(|i| {
            let z = (i as f64 - mu) / sigma;
            g.value(z * z)
        })
        .collect();
    WeightVector::normalized(raw)
}

/// Argument-value weights for a weighted arithmetic mean: each argument is
/// standardized against the sample mean and population standard deviation,
/// squared, and passed through the generator. Weights stay attached to the
/// original argument positions (this weights a plain dot product, not a
/// rank-ordered one), so equal values always receive equal weights and
/// far-out values receive small ones. All-equal arguments get uniform
/// weights.
pub fn argument_weights(g: &DensityGenerator, args: &ArgumentVector) -> Result<WeightVector> {
    g.validate()?;
    let values = args.values();
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let variance = values.iter().map(|a| (a - mean) * (a - mean)).sum::<f64>() / n;
    if variance == 0.0 {
        return WeightVector::uniform(values.len());
    }
    let sigma = variance.sqrt();
    let raw = values
        .iter()
        .map(|a| {
            let z = (a - mean) / sigma;
            g.value(z * z)
        })
        .collect();
    WeightVector::normalized(raw)
}

/// [`argument_weights`] with the normal-family generator.
pub fn gaussian_argument_weights(args: &ArgumentVector) -> Result<WeightVector> {
    argument_weights(&DensityGenerator::Normal, args)
}

/// A generator recentred at 0.5 and rescaled: the density
/// `h(y) = g(((y − 0.5)/scale)²)`, symmetric about 0.5 on `[0, 1]` by
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitDensity {
    generator: DensityGenerator,
    scale: f64,
}

impl UnitDensity {
    /// Scale used by consumers when none is specified.
    pub const DEFAULT_SCALE: f64 = 0.2;

    /// The center is fixed at 0.5; `scale > 0` controls the spread.
    pub fn new(generator: DensityGenerator, scale: f64) -> Result<Self> {
        generator.validate()?;
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(OwaError::Validation(format!(
                "unit density scale must be positive and finite, got {scale}"
            )));
        }
        Ok(Self { generator, scale })
    }

    pub fn generator(&self) -> &DensityGenerator {
        &self.generator
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    /// `h(y) = g(((y − 0.5)/scale)²)`.
    pub fn evaluate(&self, y: f64) -> f64 {
        let z = (y - 0.5) / self.scale;
        self.generator.value(z * z)
    }
}

/// The RIM quantifier `Q(x) = K ∫₀ˣ h` with `K = 1/∫₀¹ h`. Its symmetry
/// identity `Q(½+x) + Q(½−x) = 1` makes the generated weights self-dual,
/// and a strictly decreasing generator makes them centered.
pub fn quantifier_from_density(density: UnitDensity) -> Result<Quantifier> {
    Quantifier::from_density(density)
}

/// Tolerance for the symmetry part of the centered check.
const CENTERED_SYMMETRY_TOLERANCE: f64 = 1e-9;
/// Margin a strict rise or fall must clear.
const CENTERED_STRICT_TOLERANCE: f64 = 1e-12;

/// Centered check: symmetric (within 1e-9), strictly rising to the middle
/// rank and strictly falling after it (margin 1e-12), all weights positive.
/// Centered weights emphasize mid-ranked arguments and mute the extremes.
pub fn is_centered(w: &WeightVector) -> bool {
    let ws = w.as_slice();
    let n = ws.len();
    for i in 0..n / 2 {
        if (ws[i] - ws[n - 1 - i]).abs() > CENTERED_SYMMETRY_TOLERANCE {
            return false;
        }
    }
    if ws.iter().any(|&x| x <= 0.0) {
        return false;
    }
    // rising prefix covers the peak for odd n; the two middle entries of an
    // even n may tie (symmetry forces them equal)
    let peak = n.div_ceil(2);
    for i in 0..peak.saturating_sub(1) {
        if ws[i + 1] - ws[i] <= CENTERED_STRICT_TOLERANCE {
            return false;
        }
    }
    for i in (n - peak)..n.saturating_sub(1) {
        if ws[i] - ws[i + 1] <= CENTERED_STRICT_TOLERANCE {
            return false;
        }
    }
    true
}
