use std::io;
use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("invalid {what}: {reason}")]
    Validation { what: String, reason: String },
    #[error("mismatch at {label}: got {got}, expected {expected}")]
    Mismatch {
        label: String,
        got: String,
        expected: String,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn invalid(what: impl Into<String>, reason: impl ToString) -> Self {
        Self::Validation {
            what: what.into(),
            reason: reason.to_string(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Self::Io {
            path: path.into(),
            source,
        }
    }

    /// 2 for usage errors, 3 for validation failures and mismatches, 1 for
    /// I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            Self::Validation { .. } | Self::Mismatch { .. } => 3,
            Self::Io { .. } => 1,
        }
    }
}
