//! Ordered weighted averaging (OWA) aggregation with principled weight
//! construction.
//!
//! An OWA operator sorts its arguments in descending order and takes a
//! weighted sum, so weights attach to rank positions rather than to argument
//! identities. This crate provides:
//!
//! - the operator itself with its scalar measures (orness, andness,
//!   dispersion) and dual vectors ([`aggregation`]);
//! - RIM quantifiers — primitives, convex mixtures, generating-function and
//!   density-derived forms — with orness integrals, dominance and convexity
//!   checks ([`quantifier`]);
//! - weight generation from quantifiers: direct, dual, and the
//!   importance-weighted WOWA forms ([`weightgen`]);
//! - elliptical density generators with rank-position weights,
//!   argument-value weights, and centered quantifiers from symmetric unit
//!   densities ([`elliptical`]);
//! - a small adaptive Simpson quadrature used by the integral-backed forms
//!   ([`quadrature`]).
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so values can be shared and used across threads freely.
//!
//! ```
//! use owa::{owa_aggregate, weights_from_quantifier, ArgumentVector, Quantifier};
//!
//! let q = Quantifier::power(2.0)?;
//! let w = weights_from_quantifier(&q, 4)?;
//! assert_eq!(w.as_slice(), &[0.0625, 0.1875, 0.3125, 0.4375]);
//!
//! let scores = ArgumentVector::new(vec![0.6, 0.9, 0.3, 0.8])?;
//! let overall = owa_aggregate(&scores, &w)?;
//! assert!((0.3..=0.9).contains(&overall));
//! # Ok::<(), owa::OwaError>(())
//! ```

pub mod aggregation;
pub mod elliptical;
pub mod error;
pub mod quadrature;
pub mod quantifier;
pub mod weightgen;

pub use aggregation::{owa_aggregate, ArgumentVector, WeightVector};
pub use elliptical::{
    argument_weights, gaussian_argument_weights, is_centered, position_stats, position_weights,
    quantifier_from_density, DensityGenerator, UnitDensity,
};
pub use error::OwaError;
pub use quadrature::{integrate, QuadratureSpec};
pub use quantifier::{orness_via_generator, ConvexityClass, GeneratingFunction, Quantifier};
pub use weightgen::{
    dual_weights_from_quantifier, dual_wowa_aggregate, dual_wowa_weights, weights_from_quantifier,
    wowa_weights, ProbabilityVector,
};
