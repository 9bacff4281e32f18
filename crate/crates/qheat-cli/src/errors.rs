//! CLI error type with process exit codes.

use thiserror::Error;

/// Exit codes: 2 validation, 3 domain, 4 numerical integrity, 5 I/O.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("numerical integrity error: {0}")]
    Integrity(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Domain(_) => 3,
            CliError::Integrity(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl From<qheat_core::Error> for CliError {
    fn from(e: qheat_core::Error) -> Self {
        match e {
            qheat_core::Error::Domain(m) => CliError::Domain(m),
            qheat_core::Error::Integrity(m) => CliError::Integrity(m),
            qheat_core::Error::Degenerate(m) => CliError::Integrity(m),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
