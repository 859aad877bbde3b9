//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the numerical routines and experiment runners.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix dimensions are inconsistent with the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Input contains NaN or infinite entries.
    #[error("non-finite input: {0}")]
    NonFinite(String),

    /// A factorization pivot fell below the rank tolerance.
    #[error("matrix is rank deficient (pivot {pivot:.3e} below tolerance {tol:.3e} at column {col})")]
    RankDeficient { col: usize, pivot: f64, tol: f64 },

    /// A Cholesky pivot was not strictly positive.
    #[error("matrix is not positive definite (pivot {pivot:.3e} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    /// The column appended to a Cholesky factor is numerically dependent
    /// on the columns already factored.
    #[error("degenerate append: 1 - |v|^2 = {slack:.3e} is below tolerance")]
    DegenerateAppend { slack: f64 },

    /// An operation that needs at least one element received none.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// Invalid scalar or configuration value.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Every IRLS weight vanished; the robust loss rejected all residuals.
    #[error("all IRLS weights are zero; residuals are pathological")]
    AllWeightsZero,

    /// Brute-force subset enumeration would exceed the configured budget.
    #[error("brute-force budget exceeded: n = {n}, s = {s} needs {combinations} subsets (budget n <= {max_n}, s <= {max_s})")]
    BudgetExceeded {
        n: usize,
        s: usize,
        combinations: u128,
        max_n: usize,
        max_s: usize,
    },

    /// Instance generation kept producing rank-deficient design matrices.
    #[error("failed to generate a full-rank design matrix after {attempts} attempts")]
    RankRetryExhausted { attempts: usize },

    /// Experiment configuration is invalid.
    #[error("config error: {0}")]
    Config(String),

    /// Filesystem or serialization failure while running an experiment.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
