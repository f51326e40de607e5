//! Library side of the `owa` command-line tool: scheme files, input parsing,
//! report rendering, and the command implementations.

pub mod commands;
pub mod demo;
pub mod input;
pub mod report;
pub mod scheme;

use owa::OwaError;
use thiserror::Error;

/// CLI-level error, carrying the process exit code.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Dimension(String),
    #[error("{0}")]
    Convergence(String),
}

impl CliError {
    /// 2 for validation, 3 for dimension, 4 for convergence errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Validation(_) => 2,
            Self::Dimension(_) => 3,
            Self::Convergence(_) => 4,
        }
    }
}

impl From<OwaError> for CliError {
    fn from(e: OwaError) -> Self {
        match e {
            OwaError::Validation(_) | OwaError::Domain(_) => Self::Validation(e.to_string()),
            OwaError::DimensionMismatch { .. } => Self::Dimension(e.to_string()),
            OwaError::Convergence { .. } => Self::Convergence(e.to_string()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_class() {
        let validation: CliError = OwaError::Validation("bad".into()).into();
        assert_eq!(validation.exit_code(), 2);
        let domain: CliError = OwaError::Domain("out of range".into()).into();
        assert_eq!(domain.exit_code(), 2);
        let dimension: CliError = OwaError::DimensionMismatch {
            expected: 3,
            actual: 2,
        }
        .into();
        assert_eq!(dimension.exit_code(), 3);
        let convergence: CliError = OwaError::Convergence {
            estimate: 0.5,
            error_bound: 1e-3,
        }
        .into();
        assert_eq!(convergence.exit_code(), 4);
    }
}
