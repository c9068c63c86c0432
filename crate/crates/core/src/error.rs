use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("series_exp requires zero constant term")]
    NonZeroConstantTerm,

    #[error("inexact division at coefficient x^{index}: {reason}")]
    InexactDivision { index: usize, reason: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("internal consistency: {0}")]
    Consistency(String),

    #[error("quadrature did not converge: estimate {estimate:e}, error {error:e} > tol {tol:e}")]
    NonConvergence { estimate: f64, error: f64, tol: f64 },

    #[error("eigensolver failed: {0}")]
    Eigen(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
