//! Scheme files: a TOML description of how weights are produced.
//!
//! ```toml
//! kind = "dual-quantifier"     # quantifier | dual-quantifier | wowa |
//!                              # dual-wowa | elliptical-position |
//!                              # elliptical-argument | explicit
//! n = 4                        # optional; the --n flag takes precedence
//!
//! [quantifier]                 # for the quantifier/wowa kinds
//! kind = "power"               # identity | all | exists | threshold-step |
//! r = 2.0                      # trimmed-linear | power | mixture | density
//! ```
//!
//! The wowa kinds additionally take `p = [ ... ]`; the elliptical kinds take
//! a `[generator]` table (`family` plus its parameters); `explicit` takes
//! `weights = [ ... ]`. Each kind accepts exactly the fields it needs —
//! anything extra or missing is reported with its field path.

use owa::{DensityGenerator, ProbabilityVector, Quantifier, UnitDensity, WeightVector};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScheme {
    kind: String,
    quantifier: Option<RawQuantifier>,
    generator: Option<RawGenerator>,
    p: Option<Vec<f64>>,
    weights: Option<Vec<f64>>,
    n: Option<usize>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawQuantifier {
    kind: String,
    t: Option<f64>,
    lo: Option<f64>,
    hi: Option<f64>,
    r: Option<f64>,
    components: Option<Vec<RawQuantifier>>,
    alphas: Option<Vec<f64>>,
    generator: Option<RawGenerator>,
    scale: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGenerator {
    family: String,
    r: Option<f64>,
    s: Option<f64>,
    m: Option<u32>,
}

/// How weights are produced for a run.
#[derive(Debug, Clone)]
pub enum Scheme {
    /// Direct quantifier weights `Q(i/n) − Q((i−1)/n)`.
    Quantifier(Quantifier),
    /// Dual quantifier weights (the reversal of the direct ones).
    DualQuantifier(Quantifier),
    /// Quantifier at partial sums of an importance vector.
    Wowa {
        quantifier: Quantifier,
        p: ProbabilityVector,
    },
    /// Dual of the above.
    DualWowa {
        quantifier: Quantifier,
        p: ProbabilityVector,
    },
    /// Generator sampled at standardized rank positions.
    EllipticalPosition(DensityGenerator),
    /// Generator sampled at standardized argument values, row by row.
    EllipticalArgument(DensityGenerator),
    /// Weights given verbatim.
    Explicit(WeightVector),
}

/// A parsed and validated scheme file.
#[derive(Debug, Clone)]
pub struct SchemeSpec {
    pub scheme: Scheme,
    /// Dimension from the file, if any; the --n flag overrides it.
    pub n: Option<usize>,
    /// Canonical one-line echo of what was parsed, for report headers.
    pub echo: String,
}

pub fn parse_scheme(text: &str) -> Result<SchemeSpec, CliError> {
    let raw: RawScheme =
        toml::from_str(text).map_err(|e| CliError::Validation(format!("scheme: {e}")))?;
    build_scheme(raw)
}

fn require<T>(opt: Option<T>, path: &str) -> Result<T, CliError> {
    opt.ok_or_else(|| CliError::Validation(format!("{path}: required by this kind")))
}

fn forbid<T>(opt: &Option<T>, path: &str, kind: &str) -> Result<(), CliError> {
    if opt.is_some() {
        return Err(CliError::Validation(format!(
            "{path}: not allowed for kind \"{kind}\""
        )));
    }
    Ok(())
}

fn wrap<T>(res: Result<T, owa::OwaError>, path: &str) -> Result<T, CliError> {
    res.map_err(|e| match CliError::from(e) {
        CliError::Validation(m) => CliError::Validation(format!("{path}: {m}")),
        CliError::Dimension(m) => CliError::Dimension(format!("{path}: {m}")),
        CliError::Convergence(m) => CliError::Convergence(format!("{path}: {m}")),
    })
}

fn build_scheme(raw: RawScheme) -> Result<SchemeSpec, CliError> {
    let echo = echo_scheme(&raw);
    let n = raw.n;
    let kind = raw.kind.as_str();
    let scheme = match kind {
        "quantifier" | "dual-quantifier" => {
            forbid(&raw.generator, "generator", kind)?;
            forbid(&raw.p, "p", kind)?;
            forbid(&raw.weights, "weights", kind)?;
            let q = build_quantifier(require(raw.quantifier, "quantifier")?, "quantifier")?;
            if kind == "quantifier" {
                Scheme::Quantifier(q)
            } else {
                Scheme::DualQuantifier(q)
            }
        }
        "wowa" | "dual-wowa" => {
            forbid(&raw.generator, "generator", kind)?;
            forbid(&raw.weights, "weights", kind)?;
            let q = build_quantifier(require(raw.quantifier, "quantifier")?, "quantifier")?;
            let p = wrap(ProbabilityVector::new(require(raw.p, "p")?), "p")?;
            if kind == "wowa" {
                Scheme::Wowa { quantifier: q, p }
            } else {
                Scheme::DualWowa { quantifier: q, p }
            }
        }
        "elliptical-position" | "elliptical-argument" => {
            forbid(&raw.quantifier, "quantifier", kind)?;
            forbid(&raw.p, "p", kind)?;
            forbid(&raw.weights, "weights", kind)?;
            let g = build_generator(&require(raw.generator, "generator")?, "generator")?;
            if kind == "elliptical-position" {
                Scheme::EllipticalPosition(g)
            } else {
                Scheme::EllipticalArgument(g)
            }
        }
        "explicit" => {
            forbid(&raw.quantifier, "quantifier", kind)?;
            forbid(&raw.generator, "generator", kind)?;
            forbid(&raw.p, "p", kind)?;
            let w = wrap(
                WeightVector::new(require(raw.weights, "weights")?),
                "weights",
            )?;
            if let Some(n) = raw.n {
                if n != w.len() {
                    return Err(CliError::Dimension(format!(
                        "n: {} does not match the {} explicit weights",
                        n,
                        w.len()
                    )));
                }
            }
            Scheme::Explicit(w)
        }
        other => {
            return Err(CliError::Validation(format!(
                "kind: unknown scheme kind \"{other}\" (expected quantifier, dual-quantifier, \
                 wowa, dual-wowa, elliptical-position, elliptical-argument or explicit)"
            )))
        }
    };
    Ok(SchemeSpec { scheme, n, echo })
}

fn build_quantifier(raw: RawQuantifier, path: &str) -> Result<Quantifier, CliError> {
    let kind = raw.kind.as_str();
    let forbid_all = |raw: &RawQuantifier, except: &[&str]| -> Result<(), CliError> {
        let fields: [(&str, bool); 7] = [
            ("t", raw.t.is_some()),
            ("lo", raw.lo.is_some()),
            ("hi", raw.hi.is_some()),
            ("r", raw.r.is_some()),
            ("components", raw.components.is_some()),
            ("alphas", raw.alphas.is_some()),
            ("scale", raw.scale.is_some()),
        ];
        for (name, present) in fields {
            if present && !except.contains(&name) {
                return Err(CliError::Validation(format!(
                    "{path}.{name}: not allowed for quantifier kind \"{kind}\""
                )));
            }
        }
        if raw.generator.is_some() && !except.contains(&"generator") {
            return Err(CliError::Validation(format!(
                "{path}.generator: not allowed for quantifier kind \"{kind}\""
            )));
        }
        Ok(())
    };
    match kind {
        "identity" => {
            forbid_all(&raw, &[])?;
            Ok(Quantifier::identity())
        }
        "all" => {
            forbid_all(&raw, &[])?;
            Ok(Quantifier::all())
        }
        "exists" => {
            forbid_all(&raw, &[])?;
            Ok(Quantifier::exists())
        }
        "threshold-step" => {
            forbid_all(&raw, &["t"])?;
            let t = require(raw.t, &format!("{path}.t"))?;
            wrap(Quantifier::threshold_step(t), &format!("{path}.t"))
        }
        "trimmed-linear" => {
            forbid_all(&raw, &["lo", "hi"])?;
            let lo = require(raw.lo, &format!("{path}.lo"))?;
            let hi = require(raw.hi, &format!("{path}.hi"))?;
            wrap(Quantifier::trimmed_linear(lo, hi), path)
        }
        "power" => {
            forbid_all(&raw, &["r"])?;
            let r = require(raw.r, &format!("{path}.r"))?;
            wrap(Quantifier::power(r), &format!("{path}.r"))
        }
        "mixture" => {
            forbid_all(&raw, &["components", "alphas"])?;
            let components = require(raw.components, &format!("{path}.components"))?;
            let alphas = require(raw.alphas, &format!("{path}.alphas"))?;
            let mut built = Vec::with_capacity(components.len());
            for (i, c) in components.into_iter().enumerate() {
                built.push(build_quantifier(c, &format!("{path}.components[{i}]"))?);
            }
            wrap(Quantifier::mixture(built, alphas), path)
        }
        "density" => {
            forbid_all(&raw, &["generator", "scale"])?;
            let g = build_generator(
                &require(raw.generator, &format!("{path}.generator"))?,
                &format!("{path}.generator"),
            )?;
            let scale = raw.scale.unwrap_or(UnitDensity::DEFAULT_SCALE);
            let density = wrap(UnitDensity::new(g, scale), &format!("{path}.scale"))?;
            wrap(Quantifier::from_density(density), path)
        }
        other => Err(CliError::Validation(format!(
            "{path}.kind: unknown quantifier kind \"{other}\" (expected identity, all, exists, \
             threshold-step, trimmed-linear, power, mixture or density)"
        ))),
    }
}

fn build_generator(raw: &RawGenerator, path: &str) -> Result<DensityGenerator, CliError> {
    let family = raw.family.as_str();
    let forbid_params = |except: &[&str]| -> Result<(), CliError> {
        let fields = [
            ("r", raw.r.is_some()),
            ("s", raw.s.is_some()),
            ("m", raw.m.is_some()),
        ];
        for (name, present) in fields {
            if present && !except.contains(&name) {
                return Err(CliError::Validation(format!(
                    "{path}.{name}: not allowed for family \"{family}\""
                )));
            }
        }
        Ok(())
    };
    let g = match family {
        "cauchy" => {
            forbid_params(&[])?;
            DensityGenerator::Cauchy
        }
        "laplace" => {
            forbid_params(&[])?;
            DensityGenerator::Laplace
        }
        "logistic" => {
            forbid_params(&[])?;
            DensityGenerator::Logistic
        }
        "normal" => {
            forbid_params(&[])?;
            DensityGenerator::Normal
        }
        "exponential-power" => {
            forbid_params(&["r", "s"])?;
            DensityGenerator::ExponentialPower {
                r: require(raw.r, &format!("{path}.r"))?,
                s: require(raw.s, &format!("{path}.s"))?,
            }
        }
        "student-t" => {
            forbid_params(&["m"])?;
            DensityGenerator::StudentT {
                m: require(raw.m, &format!("{path}.m"))?,
            }
        }
        other => {
            return Err(CliError::Validation(format!(
                "{path}.family: unknown family \"{other}\" (expected cauchy, exponential-power, \
                 laplace, logistic, normal or student-t)"
            )))
        }
    };
    wrap(g.validate(), path)?;
    Ok(g)
}

/// Canonical one-line echo of the parsed file, in file order.
fn echo_scheme(raw: &RawScheme) -> String {
    let mut parts = vec![format!("kind={}", raw.kind)];
    if let Some(q) = &raw.quantifier {
        parts.push(format!("quantifier={}", echo_quantifier(q)));
    }
    if let Some(g) = &raw.generator {
        parts.push(format!("generator={}", echo_generator(g)));
    }
    if let Some(p) = &raw.p {
        parts.push(format!("p={}", echo_vec(p)));
    }
    if let Some(w) = &raw.weights {
        parts.push(format!("weights={}", echo_vec(w)));
    }
    if let Some(n) = raw.n {
        parts.push(format!("n={n}"));
    }
    parts.join(" ")
}

fn echo_vec(values: &[f64]) -> String {
    let inner: Vec<String> = values.iter().map(|v| format!("{v}")).collect();
    format!("[{}]", inner.join(","))
}

fn echo_quantifier(raw: &RawQuantifier) -> String {
    let mut args = Vec::new();
    if let Some(t) = raw.t {
        args.push(format!("t={t}"));
    }
    if let Some(lo) = raw.lo {
        args.push(format!("lo={lo}"));
    }
    if let Some(hi) = raw.hi {
        args.push(format!("hi={hi}"));
    }
    if let Some(r) = raw.r {
        args.push(format!("r={r}"));
    }
    if let Some(alphas) = &raw.alphas {
        args.push(format!("alphas={}", echo_vec(alphas)));
    }
    if let Some(components) = &raw.components {
        let inner: Vec<String> = components.iter().map(echo_quantifier).collect();
        args.push(format!("components=[{}]", inner.join(",")));
    }
    if let Some(g) = &raw.generator {
        args.push(format!("generator={}", echo_generator(g)));
    }
    if let Some(scale) = raw.scale {
        args.push(format!("scale={scale}"));
    }
    if args.is_empty() {
        raw.kind.clone()
    } else {
        format!("{}({})", raw.kind, args.join(","))
    }
}

fn echo_generator(raw: &RawGenerator) -> String {
    let mut args = Vec::new();
    if let Some(r) = raw.r {
        args.push(format!("r={r}"));
    }
    if let Some(s) = raw.s {
        args.push(format!("s={s}"));
    }
    if let Some(m) = raw.m {
        args.push(format!("m={m}"));
    }
    if args.is_empty() {
        raw.family.clone()
    } else {
        format!("{}({})", raw.family, args.join(","))
    }
}
