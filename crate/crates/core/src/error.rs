//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A parameter or covariate is outside the range a model function accepts.
    #[error("domain error: {0}")]
    Domain(String),

    /// Invalid or inconsistent input data.
    #[error("data error: {0}")]
    Data(String),

    /// Sampler configuration or initialization failure.
    #[error("mcmc error: {0}")]
    Mcmc(String),

    /// The requested model/covariate combination is meaningless
    /// (e.g. varying P for a model whose mean ignores P).
    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
