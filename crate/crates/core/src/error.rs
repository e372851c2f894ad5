use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by every operation in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid cut: {0}")]
    InvalidCut(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e} < -1e-8)")]
    NotPsd { eigenvalue: f64 },

    #[error("factorization residual {residual:e} exceeds 1e-10")]
    Factorization { residual: f64 },

    #[error("enumeration of {supports} supports exceeds budget {budget}; use the Monte-Carlo estimator")]
    BudgetExceeded { supports: u128, budget: u128 },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
