//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised by the physics routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Inputs outside the physical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A computed state or matrix violated a numerical-integrity bound.
    #[error("numerical integrity error: {0}")]
    Integrity(String),

    /// The steady-state null space is not one-dimensional within tolerance.
    #[error("degenerate steady state: {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
