use std::path::PathBuf;

use thiserror::Error;

/// Exit status for malformed input.
pub const EXIT_INPUT: i32 = 2;
/// Exit status for numeric failures, including failed asserted checks.
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("numeric failure: {0}")]
    Numeric(#[from] fractal_fourier::Error),
    #[error("{0}")]
    ChecksFailed(String),
}

impl CliError {
    pub fn input(msg: impl Into<String>) -> Self {
        Self::Input(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) | Self::Read { .. } | Self::Write { .. } => EXIT_INPUT,
            Self::Numeric(_) | Self::ChecksFailed(_) => EXIT_NUMERIC,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
