//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the estimation routines.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument violated a domain precondition (`N = 0`, `r` outside
    /// `[0, 1]`, invalid `(j, m)` pair, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature did not reach the requested tolerance within the
    /// refinement budget. Carries the last two estimates.
    #[error("quadrature did not converge: last estimates {last:e} and {previous:e}")]
    QuadratureNonConvergence { last: f64, previous: f64 },

    /// A prior table failed validation.
    #[error("invalid prior table: {0}")]
    PriorTable(String),

    /// Seed vectors violated the per-`m` column normalization.
    #[error("seed normalization violated by {0:e}")]
    SeedNormalization(f64),

    /// The seed optimizer exhausted its iteration budget before reaching the
    /// gradient tolerance. Carries the best value found so far.
    #[error("seed optimizer stagnated; best value found {best}")]
    OptimizerStagnated { best: f64 },

    /// Rejection sampling fell below the minimum acceptance rate.
    #[error("rejection sampling acceptance rate {rate:e} below 1e-4 (j = {two_j}/2)")]
    RejectionStalled { rate: f64, two_j: i32 },

    /// A numeric operation failed (singular matrix, non-PSD input, ...).
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
