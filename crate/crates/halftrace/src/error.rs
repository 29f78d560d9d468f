use std::path::PathBuf;

use halftrace_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed string file: {0}")]
    Format(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Usage(String),
    #[error("rejected: {0}")]
    Rejected(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// 0 success, 1 validation failure, 2 numerical non-convergence,
    /// 3 statistical verification failure.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Core(
                CoreError::NonConvergent { .. }
                | CoreError::DegenerateNormalization { .. }
                | CoreError::QuadratureFailure { .. },
            ) => 2,
            Error::Core(CoreError::InsufficientLocalTime { .. }) | Error::Verification(_) => 3,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(source: std::io::Error) -> Self {
        Error::Io {
            path: PathBuf::from("<stream>"),
            source,
        }
    }
}
