use std::path::PathBuf;

use aqc_core::ErrorKind;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] aqc_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// Malformed input file or string.
    #[error("{0}")]
    Format(String),
    /// Inconsistent or missing arguments.
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 2 precondition, 3 budget, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.kind() {
                ErrorKind::Precondition => 2,
                ErrorKind::Budget => 3,
            },
            CliError::Usage(_) => 2,
            CliError::Io { .. } | CliError::Format(_) => 4,
        }
    }
}
