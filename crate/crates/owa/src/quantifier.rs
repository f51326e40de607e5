//! Regular increasing monotone (RIM) quantifiers: nondecreasing functions on
//! `[0, 1]` with `Q(0) = 0` and `Q(1) = 1`, the shapes behind linguistic
//! quantities such as "all" and "there exists".
//!
//! Quantifiers come in closed forms (identity, indicators, steps, powers),
//! convex mixtures, and two integral-backed forms: the running integral of a
//! [`GeneratingFunction`] and the normalized running integral of a symmetric
//! [`UnitDensity`]. Step shapes never touch quadrature — their integrals are
//! exact piecewise formulas — so adaptive subdivision cannot stall on a jump.

use std::fmt;
use std::sync::Arc;

use crate::elliptical::UnitDensity;
use crate::error::{OwaError, Result};
use crate::quadrature::{integrate, QuadratureSpec};

/// Number of cells in the construction-time monotonicity grid (1001 points).
const RIM_GRID: usize = 1000;
/// Tolerance on `Q(0) = 0` and `Q(1) = 1`.
const ENDPOINT_TOLERANCE: f64 = 1e-9;
/// Slack allowed when checking that grid values do not decrease.
const MONOTONE_TOLERANCE: f64 = 1e-12;
/// Tolerance on mixture coefficients summing to one.
const MIXTURE_SUM_TOLERANCE: f64 = 1e-12;
/// Slack in pointwise dominance comparisons.
const DOMINANCE_TOLERANCE: f64 = 1e-12;
/// Threshold on second differences for convexity classification.
const SECOND_DIFF_TOLERANCE: f64 = 1e-10;
/// Tolerance on a generating function's total mass.
const GENERATOR_MASS_TOLERANCE: f64 = 1e-6;

/// Quadrature budget for evaluating integral-backed quantifiers. The extra
/// depth over the general-purpose default covers densities with a cusp (the
/// Laplace-like exponential-power shapes).
fn eval_quadrature() -> QuadratureSpec {
    QuadratureSpec {
        tolerance: 1e-12,
        max_depth: 44,
    }
}

/// Quadrature budget for orness integrals; deep enough for the root-type
/// endpoint behaviour of `x^r`, `r < 1`.
fn orness_quadrature() -> QuadratureSpec {
    QuadratureSpec {
        tolerance: 1e-8,
        max_depth: 44,
    }
}

/// A density on `[0, 1]` whose running integral is a RIM quantifier.
#[derive(Clone)]
pub struct GeneratingFunction {
    f: Arc<dyn Fn(f64) -> f64 + Send + Sync>,
    smooth: bool,
}

impl fmt::Debug for GeneratingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GeneratingFunction")
            .field("smooth", &self.smooth)
            .finish_non_exhaustive()
    }
}

impl GeneratingFunction {
    /// Wraps `f` after checking nonnegativity on a grid and unit total mass
    /// (within 1e-6, by quadrature). `smooth` declares differentiability; it
    /// is caller-asserted metadata, not verified.
    pub fn new<F>(f: F, smooth: bool) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        for k in 0..=RIM_GRID {
            let x = k as f64 / RIM_GRID as f64;
            let v = f(x);
            if !v.is_finite() {
                return Err(OwaError::Validation(format!(
                    "generating function is not finite at {x}: {v}"
                )));
            }
            if v < -MONOTONE_TOLERANCE {
                return Err(OwaError::Validation(format!(
                    "generating function is negative at {x}: {v}"
                )));
            }
        }
        let mass = integrate(&f, 0.0, 1.0, &QuadratureSpec::default())?;
        if (mass - 1.0).abs() > GENERATOR_MASS_TOLERANCE {
            return Err(OwaError::Validation(format!(
                "generating function must integrate to 1 over [0, 1], got {mass}"
            )));
        }
        Ok(Self {
            f: Arc::new(f),
            smooth,
        })
    }

    /// Density value at `x`; meaningful on `[0, 1]`.
    pub fn evaluate(&self, x: f64) -> f64 {
        (self.f)(x)
    }

    pub fn is_smooth(&self) -> bool {
        self.smooth
    }

    /// The mirror image `g(x) = f(1 − x)`. The quantifiers generated by a
    /// density and its mirror have complementary orness.
    pub fn reflect(&self) -> Self {
        let inner = Arc::clone(&self.f);
        Self {
            f: Arc::new(move |x| inner(1.0 - x)),
            smooth: self.smooth,
        }
    }
}

/// `1 − ∫₀¹ t·f(t) dt`: the orness of the quantifier generated by `f`,
/// obtained from the density's first moment rather than from `∫ Q`.
pub fn orness_via_generator(f: &GeneratingFunction) -> Result<f64> {
    let moment = integrate(|t| t * f.evaluate(t), 0.0, 1.0, &orness_quadrature())?;
    Ok(1.0 - moment)
}

/// Shape classification from sampled second differences.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexityClass {
    Convex,
    Concave,
    /// Affine within tolerance: both convex and concave.
    Both,
    Neither,
}

#[derive(Debug, Clone)]
enum Repr {
    Identity,
    All,
    Exists,
    ThresholdStep { threshold: f64 },
    TrimmedLinear { lo: f64, hi: f64 },
    Power { exponent: f64 },
    Mixture { parts: Vec<(f64, Quantifier)> },
    Generator { f: GeneratingFunction, norm: f64 },
    Density { density: UnitDensity, norm: f64 },
}

/// A RIM quantifier value. Construction validates the representation;
/// evaluation is pure and thread-safe.
#[derive(Debug, Clone)]
pub struct Quantifier {
    repr: Repr,
}

impl Quantifier {
    /// `Q(x) = x`; generates uniform weights (the arithmetic mean).
    pub fn identity() -> Self {
        Self {
            repr: Repr::Identity,
        }
    }

    /// Indicator of `x = 1`: the linguistic "all". Generated weights select
    /// the minimum.
    pub fn all() -> Self {
        Self { repr: Repr::All }
    }

    /// Indicator of `x ≠ 0`: the linguistic "there exists". Generated
    /// weights select the maximum. Discontinuous at 0: `Q(0) = 0`,
    /// `Q(x) = 1` for every `x > 0`.
    pub fn exists() -> Self {
        Self { repr: Repr::Exists }
    }

    /// 0 below `threshold`, 1 from `threshold` on; `threshold ∈ (0, 1]`.
    pub fn threshold_step(threshold: f64) -> Result<Self> {
        if !(threshold > 0.0 && threshold <= 1.0) {
            return Err(OwaError::Validation(format!(
                "step threshold must lie in (0, 1], got {threshold}"
            )));
        }
        Ok(Self {
            repr: Repr::ThresholdStep { threshold },
        })
    }

    /// 0 up to `lo`, linear from 0 to 1 on `[lo, hi]`, clamped at 1 beyond
    /// `hi`; requires `0 ≤ lo < hi ≤ 1`. With `lo = 1/n`, `hi = (n−1)/n`
    /// this generates the olympic weights (drop the extremes, average the
    /// rest).
    pub fn trimmed_linear(lo: f64, hi: f64) -> Result<Self> {
        if !(lo >= 0.0 && lo < hi && hi <= 1.0) {
            return Err(OwaError::Validation(format!(
                "trimmed-linear bounds must satisfy 0 <= lo < hi <= 1, got lo={lo}, hi={hi}"
            )));
        }
        Ok(Self {
            repr: Repr::TrimmedLinear { lo, hi },
        })
    }

    /// `Q(x) = x^r` with `r > 0`; convex for `r > 1`, concave for `r < 1`.
    pub fn power(exponent: f64) -> Result<Self> {
        if !(exponent > 0.0 && exponent.is_finite()) {
            return Err(OwaError::Validation(format!(
                "power exponent must be positive and finite, got {exponent}"
            )));
        }
        Ok(Self {
            repr: Repr::Power { exponent },
        })
    }

    /// Pointwise convex combination `Σ αᵢ Qᵢ`; `αᵢ ≥ 0`, `Σ αᵢ = 1` within
    /// 1e-12.
    pub fn mixture(components: Vec<Quantifier>, alphas: Vec<f64>) -> Result<Self> {
        if components.is_empty() {
            return Err(OwaError::Validation(
                "mixture needs at least one component".into(),
            ));
        }
        if components.len() != alphas.len() {
            return Err(OwaError::DimensionMismatch {
                expected: components.len(),
                actual: alphas.len(),
            });
        }
        for (i, &a) in alphas.iter().enumerate() {
            if a < 0.0 || !a.is_finite() {
                return Err(OwaError::Validation(format!(
                    "mixture coefficient {} must be nonnegative, got {a}",
                    i + 1
                )));
            }
        }
        let total: f64 = alphas.iter().sum();
        if (total - 1.0).abs() > MIXTURE_SUM_TOLERANCE {
            return Err(OwaError::Validation(format!(
                "mixture coefficients must sum to 1, got {total}"
            )));
        }
        let parts = alphas.into_iter().zip(components).collect();
        Ok(Self {
            repr: Repr::Mixture { parts },
        })
    }

    /// `Q(x) = ∫₀ˣ f / ∫₀¹ f`. The denominator is fixed at construction so
    /// the endpoints are exact even when the declared unit mass carries its
    /// 1e-6 slack.
    pub fn from_generator(f: GeneratingFunction) -> Result<Self> {
        let norm = integrate(|x| f.evaluate(x), 0.0, 1.0, &eval_quadrature())?;
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(OwaError::Validation(format!(
                "generating function mass is not positive: {norm}"
            )));
        }
        let q = Self {
            repr: Repr::Generator { f, norm },
        };
        q.check_rim_grid()?;
        Ok(q)
    }

    /// `Q(x) = K ∫₀ˣ h` with `K = 1/∫₀¹ h`, for a symmetric unit density
    /// `h`. Satisfies `Q(½+x) + Q(½−x) = 1`, which makes the generated
    /// weights self-dual and centered.
    pub fn from_density(density: UnitDensity) -> Result<Self> {
        let norm = integrate(|y| density.evaluate(y), 0.0, 1.0, &eval_quadrature())?;
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(OwaError::Validation(format!(
                "unit density mass is not positive: {norm}"
            )));
        }
        let q = Self {
            repr: Repr::Density { density, norm },
        };
        q.check_rim_grid()?;
        Ok(q)
    }

    /// Grid check for the evaluator-backed representations; closed forms are
    /// monotone by construction and skip it.
    fn check_rim_grid(&self) -> Result<()> {
        let points: Vec<f64> = (0..=RIM_GRID).map(|k| k as f64 / RIM_GRID as f64).collect();
        let values = self.eval_grid_unchecked(&points)?;
        if values[0].abs() > ENDPOINT_TOLERANCE {
            return Err(OwaError::Validation(format!(
                "quantifier must vanish at 0, got {}",
                values[0]
            )));
        }
        if (values[RIM_GRID] - 1.0).abs() > ENDPOINT_TOLERANCE {
            return Err(OwaError::Validation(format!(
                "quantifier must reach 1 at 1, got {}",
                values[RIM_GRID]
            )));
        }
        for (k, pair) in values.windows(2).enumerate() {
            if pair[1] < pair[0] - MONOTONE_TOLERANCE {
                return Err(OwaError::Validation(format!(
                    "quantifier decreases between {} and {}",
                    k as f64 / RIM_GRID as f64,
                    (k + 1) as f64 / RIM_GRID as f64
                )));
            }
        }
        Ok(())
    }

    /// `Q(x)` for `x ∈ [0, 1]`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&x) {
            return Err(OwaError::Domain(format!(
                "quantifier argument must lie in [0, 1], got {x}"
            )));
        }
        self.eval_unchecked(x)
    }

    fn eval_unchecked(&self, x: f64) -> Result<f64> {
        Ok(match &self.repr {
            Repr::Identity => x,
            Repr::All => {
                if x == 1.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Repr::Exists => {
                if x == 0.0 {
                    0.0
                } else {
                    1.0
                }
            }
            Repr::ThresholdStep { threshold } => {
                if x >= *threshold {
                    1.0
                } else {
                    0.0
                }
            }
            Repr::TrimmedLinear { lo, hi } => {
                if x <= *lo {
                    0.0
                } else if x >= *hi {
                    1.0
                } else {
                    (x - lo) / (hi - lo)
                }
            }
            Repr::Power { exponent } => x.powf(*exponent),
            Repr::Mixture { parts } => {
                let mut acc = 0.0;
                for (alpha, q) in parts {
                    acc += alpha * q.eval_unchecked(x)?;
                }
                acc
            }
            Repr::Generator { f, norm } => {
                let raw = integrate(|z| f.evaluate(z), 0.0, x, &eval_quadrature())?;
                (raw / norm).clamp(0.0, 1.0)
            }
            Repr::Density { density, norm } => {
                let raw = integrate(|y| density.evaluate(y), 0.0, x, &eval_quadrature())?;
                (raw / norm).clamp(0.0, 1.0)
            }
        })
    }

    /// `Q` at a nondecreasing sequence of points in `[0, 1]`.
    ///
    /// Integral-backed quantifiers accumulate one integral per cell between
    /// consecutive points, so differences of neighbouring outputs inherit the
    /// sign of the integrand instead of the noise of two independent runs.
    pub fn eval_grid(&self, points: &[f64]) -> Result<Vec<f64>> {
        if points.is_empty() {
            return Err(OwaError::Validation(
                "evaluation grid must be nonempty".into(),
            ));
        }
        for pair in points.windows(2) {
            if pair[1] < pair[0] {
                return Err(OwaError::Validation(
                    "evaluation grid must be nondecreasing".into(),
                ));
            }
        }
        if !(0.0..=1.0).contains(&points[0]) || !(0.0..=1.0).contains(&points[points.len() - 1]) {
            return Err(OwaError::Domain(
                "evaluation grid must lie in [0, 1]".into(),
            ));
        }
        self.eval_grid_unchecked(points)
    }

    fn eval_grid_unchecked(&self, points: &[f64]) -> Result<Vec<f64>> {
        match &self.repr {
            Repr::Mixture { parts } => {
                let mut out = vec![0.0; points.len()];
                for (alpha, q) in parts {
                    let vals = q.eval_grid_unchecked(points)?;
                    for (o, v) in out.iter_mut().zip(vals) {
                        *o += alpha * v;
                    }
                }
                Ok(out)
            }
            Repr::Generator { f, norm } => cumulative_grid(|z| f.evaluate(z), points, *norm),
            Repr::Density { density, norm } => {
                cumulative_grid(|y| density.evaluate(y), points, *norm)
            }
            _ => points.iter().map(|&x| self.eval_unchecked(x)).collect(),
        }
    }

    /// `∫₀¹ Q`, the degree to which the generated weights behave like max.
    /// Step shapes use exact formulas; mixtures combine their components;
    /// everything else integrates adaptively at 1e-8.
    pub fn orness(&self) -> Result<f64> {
        match &self.repr {
            Repr::All => Ok(0.0),
            Repr::Exists => Ok(1.0),
            Repr::ThresholdStep { threshold } => Ok(1.0 - threshold),
            Repr::Mixture { parts } => {
                let mut acc = 0.0;
                for (alpha, q) in parts {
                    acc += alpha * q.orness()?;
                }
                Ok(acc)
            }
            _ => integrate(
                |x| self.eval_unchecked(x).unwrap_or(f64::NAN),
                0.0,
                1.0,
                &orness_quadrature(),
            ),
        }
    }

    /// `1 − ∫₀¹ Q`: the orness of the dual (reversed-weight) construction.
    pub fn dual_orness(&self) -> Result<f64> {
        Ok(1.0 - self.orness()?)
    }

    /// True when `self ≥ other − 1e-12` at every grid point `k/gridsize`,
    /// `k = 0..=gridsize`. Needs `gridsize ≥ 2`.
    pub fn dominates(&self, other: &Quantifier, gridsize: usize) -> Result<bool> {
        if gridsize < 2 {
            return Err(OwaError::Validation(format!(
                "dominance grid must have at least 2 cells, got {gridsize}"
            )));
        }
        let points: Vec<f64> = (0..=gridsize).map(|k| k as f64 / gridsize as f64).collect();
        let ours = self.eval_grid_unchecked(&points)?;
        let theirs = other.eval_grid_unchecked(&points)?;
        Ok(ours
            .iter()
            .zip(&theirs)
            .all(|(a, b)| *a >= *b - DOMINANCE_TOLERANCE))
    }

    /// Classification by second differences `Q(x+h) + Q(x−h) − 2Q(x)` on a
    /// uniform grid with `gridsize ≥ 3` cells. Sampled, not proven.
    pub fn convexity_class(&self, gridsize: usize) -> Result<ConvexityClass> {
        if gridsize < 3 {
            return Err(OwaError::Validation(format!(
                "convexity grid must have at least 3 cells, got {gridsize}"
            )));
        }
        let points: Vec<f64> = (0..=gridsize).map(|k| k as f64 / gridsize as f64).collect();
        let values = self.eval_grid_unchecked(&points)?;
        let mut any_pos = false;
        let mut any_neg = false;
        for k in 1..gridsize {
            let d2 = values[k + 1] + values[k - 1] - 2.0 * values[k];
            if d2 > SECOND_DIFF_TOLERANCE {
                any_pos = true;
            } else if d2 < -SECOND_DIFF_TOLERANCE {
                any_neg = true;
            }
        }
        Ok(match (any_pos, any_neg) {
            (false, false) => ConvexityClass::Both,
            (true, false) => ConvexityClass::Convex,
            (false, true) => ConvexityClass::Concave,
            (true, true) => ConvexityClass::Neither,
        })
    }
}

fn cumulative_grid<F: Fn(f64) -> f64>(f: F, points: &[f64], norm: f64) -> Result<Vec<f64>> {
    let spec = eval_quadrature();
    let mut out = Vec::with_capacity(points.len());
    let mut acc = integrate(&f, 0.0, points[0], &spec)?;
    out.push((acc / norm).clamp(0.0, 1.0));
    for pair in points.windows(2) {
        acc += integrate(&f, pair[0], pair[1], &spec)?;
        out.push((acc / norm).clamp(0.0, 1.0));
    }
    Ok(out)
}
