//! Command implementations shared by the binary and its tests.

use owa::{
    argument_weights, dual_weights_from_quantifier, dual_wowa_weights, owa_aggregate,
    position_weights, weights_from_quantifier, wowa_weights, ArgumentVector, Quantifier,
    WeightVector,
};

use crate::demo::{run_bias_demo, BiasDemoConfig, DemoSummary};
use crate::report::{Measures, RunReport};
use crate::scheme::{Scheme, SchemeSpec};
use crate::CliError;

/// The dimension a run should use: the --n flag wins, then the scheme's `n`,
/// then whatever the kind itself implies.
pub fn resolve_n(spec: &SchemeSpec, flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = flag.or(spec.n) {
        if n == 0 {
            return Err(CliError::Validation("n must be at least 1".into()));
        }
        return Ok(n);
    }
    match &spec.scheme {
        Scheme::Wowa { p, .. } | Scheme::DualWowa { p, .. } => Ok(p.len()),
        Scheme::Explicit(w) => Ok(w.len()),
        _ => Err(CliError::Validation(
            "n: required (pass --n or set n in the scheme)".into(),
        )),
    }
}

/// Weights for a position-based scheme of dimension `n`.
pub fn weights_for(scheme: &Scheme, n: usize) -> Result<WeightVector, CliError> {
    match scheme {
        Scheme::Quantifier(q) => Ok(weights_from_quantifier(q, n)?),
        Scheme::DualQuantifier(q) => Ok(dual_weights_from_quantifier(q, n)?),
        Scheme::Wowa { quantifier, p } => {
            if n != p.len() {
                return Err(CliError::Dimension(format!(
                    "n = {n} does not match the {} entries of p",
                    p.len()
                )));
            }
            Ok(wowa_weights(quantifier, p)?)
        }
        Scheme::DualWowa { quantifier, p } => {
            if n != p.len() {
                return Err(CliError::Dimension(format!(
                    "n = {n} does not match the {} entries of p",
                    p.len()
                )));
            }
            Ok(dual_wowa_weights(quantifier, p)?)
        }
        Scheme::EllipticalPosition(g) => Ok(position_weights(g, n)?),
        Scheme::EllipticalArgument(_) => Err(CliError::Validation(
            "elliptical-argument weights require data; use the aggregate command".into(),
        )),
        Scheme::Explicit(w) => {
            if n != w.len() {
                return Err(CliError::Dimension(format!(
                    "n = {n} does not match the {} explicit weights",
                    w.len()
                )));
            }
            Ok(w.clone())
        }
    }
}

pub fn cmd_weights(spec: &SchemeSpec, n: usize) -> Result<(WeightVector, Measures), CliError> {
    let w = weights_for(&spec.scheme, n)?;
    let m = Measures::of(&w);
    Ok((w, m))
}

pub fn cmd_aggregate(spec: &SchemeSpec, rows: &[Vec<f64>]) -> Result<Vec<RunReport>, CliError> {
    match &spec.scheme {
        Scheme::EllipticalArgument(g) => rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let args = ArgumentVector::new(row.clone())
                    .map_err(|e| CliError::Validation(format!("row {}: {e}", i + 1)))?;
                let weights = argument_weights(g, &args)?;
                // weighted arithmetic mean: weights stay on source positions
                let aggregate = weights.iter().zip(row).map(|(w, a)| w * a).sum();
                Ok(RunReport {
                    row: i + 1,
                    aggregate,
                    measures: Measures::of(&weights),
                    weights,
                })
            })
            .collect(),
        scheme => {
            let n = match spec.n {
                Some(n) => {
                    if rows[0].len() != n {
                        return Err(CliError::Dimension(format!(
                            "row 1: expected length {n} from the scheme, got {}",
                            rows[0].len()
                        )));
                    }
                    n
                }
                None => rows[0].len(),
            };
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(CliError::Dimension(format!(
                        "row {}: expected length {n}, got {}",
                        i + 1,
                        row.len()
                    )));
                }
            }
            let weights = weights_for(scheme, n)?;
            let measures = Measures::of(&weights);
            rows.iter()
                .enumerate()
                .map(|(i, row)| {
                    let args = ArgumentVector::new(row.clone())
                        .map_err(|e| CliError::Validation(format!("row {}: {e}", i + 1)))?;
                    let aggregate = owa_aggregate(&args, &weights)?;
                    Ok(RunReport {
                        row: i + 1,
                        aggregate,
                        weights: weights.clone(),
                        measures,
                    })
                })
                .collect()
        }
    }
}

/// Measures of explicit weight rows.
pub fn cmd_orness(rows: &[Vec<f64>]) -> Result<Vec<(usize, Measures)>, CliError> {
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let w = WeightVector::new(row.clone())
                .map_err(|e| CliError::Validation(format!("row {}: {e}", i + 1)))?;
            Ok((i + 1, Measures::of(&w)))
        })
        .collect()
}

/// `(x, Q(x))` at `x = k/grid`, `k = 0..=grid`, for plotting.
pub fn cmd_quantifier(spec: &SchemeSpec, grid: usize) -> Result<Vec<(f64, f64)>, CliError> {
    if grid < 1 {
        return Err(CliError::Validation("grid must be at least 1".into()));
    }
    let q: &Quantifier = match &spec.scheme {
        Scheme::Quantifier(q)
        | Scheme::DualQuantifier(q)
        | Scheme::Wowa { quantifier: q, .. }
        | Scheme::DualWowa { quantifier: q, .. } => q,
        other => {
            return Err(CliError::Validation(format!(
                "scheme kind has no quantifier to tabulate: {}",
                scheme_kind_name(other)
            )))
        }
    };
    let points: Vec<f64> = (0..=grid).map(|k| k as f64 / grid as f64).collect();
    let values = q.eval_grid(&points)?;
    Ok(points.into_iter().zip(values).collect())
}

fn scheme_kind_name(scheme: &Scheme) -> &'static str {
    match scheme {
        Scheme::Quantifier(_) => "quantifier",
        Scheme::DualQuantifier(_) => "dual-quantifier",
        Scheme::Wowa { .. } => "wowa",
        Scheme::DualWowa { .. } => "dual-wowa",
        Scheme::EllipticalPosition(_) => "elliptical-position",
        Scheme::EllipticalArgument(_) => "elliptical-argument",
        Scheme::Explicit(_) => "explicit",
    }
}

pub fn cmd_demo_bias(cfg: &BiasDemoConfig) -> Result<DemoSummary, CliError> {
    run_bias_demo(cfg)
}
