//! Adaptive Simpson quadrature over finite intervals.

use crate::error::{OwaError, Result};

/// Tolerance and recursion budget for [`integrate`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Absolute error target.
    pub tolerance: f64,
    /// Maximum bisection depth before an interval is declared stuck.
    pub max_depth: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            tolerance: 1e-8,
            max_depth: 30,
        }
    }
}

impl QuadratureSpec {
    pub fn new(tolerance: f64, max_depth: u32) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(OwaError::Validation(format!(
                "quadrature tolerance must be positive and finite, got {tolerance}"
            )));
        }
        if max_depth == 0 {
            return Err(OwaError::Validation(
                "quadrature max_depth must be at least 1".into(),
            ));
        }
        Ok(Self {
            tolerance,
            max_depth,
        })
    }
}

struct Estimate {
    value: f64,
    error: f64,
    exhausted: bool,
}

fn simpson(fa: f64, fm: f64, fb: f64, width: f64) -> f64 {
    width / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> Estimate {
    let lm = a + (m - a) / 2.0;
    let rm = m + (b - m) / 2.0;
    let (flm, frm) = (f(lm), f(rm));
    if !flm.is_finite() || !frm.is_finite() {
        return Estimate {
            value: f64::NAN,
            error: f64::INFINITY,
            exhausted: true,
        };
    }
    let left = simpson(fa, flm, fm, m - a);
    let right = simpson(fm, frm, fb, b - m);
    let eps = left + right - whole;
    let value = left + right + eps / 15.0;
    if eps.abs() <= 15.0 * tol {
        return Estimate {
            value,
            error: eps.abs() / 15.0,
            exhausted: false,
        };
    }
    if depth == 0 {
        return Estimate {
            value,
            error: eps.abs() / 15.0,
            exhausted: true,
        };
    }
    let l = refine(f, a, fa, lm, flm, m, fm, left, tol / 2.0, depth - 1);
    let r = refine(f, m, fm, rm, frm, b, fb, right, tol / 2.0, depth - 1);
    Estimate {
        value: l.value + r.value,
        error: l.error + r.error,
        exhausted: l.exhausted || r.exhausted,
    }
}

/// Adaptive Simpson estimate of `∫ f` over `[a, b]`.
///
/// Requires `a <= b` and a finite integrand; `a == b` returns 0 exactly.
/// When some subinterval still misses its tolerance share at
/// `spec.max_depth`, the best estimate and achieved error bound are
/// reported through [`OwaError::Convergence`].
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, spec: &QuadratureSpec) -> Result<f64> {
    if a > b || a.is_nan() || b.is_nan() {
        return Err(OwaError::Domain(format!(
            "integration bounds out of order: [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(0.0);
    }
    let m = a + (b - a) / 2.0;
    let (fa, fm, fb) = (f(a), f(m), f(b));
    if !fa.is_finite() || !fm.is_finite() || !fb.is_finite() {
        return Err(OwaError::Domain(format!(
            "integrand is not finite on [{a}, {b}]"
        )));
    }
    let whole = simpson(fa, fm, fb, b - a);
    let est = refine(
        &f,
        a,
        fa,
        m,
        fm,
        b,
        fb,
        whole,
        spec.tolerance,
        spec.max_depth,
    );
    if est.exhausted {
        return Err(OwaError::Convergence {
            estimate: est.value,
            error_bound: est.error,
        });
    }
    Ok(est.value)
}
