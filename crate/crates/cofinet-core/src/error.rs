//! Error type shared across the crate.

use thiserror::Error;

/// Crate-wide error. Variants map onto process exit codes (see
/// [`Error::exit_code`]): configuration and dimension problems are usage
/// errors, format/io cover files, numeric covers non-finite results.
#[derive(Debug, Error)]
pub enum Error {
    /// A tensor axis or spatial relationship does not line up.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// Invalid configuration value or op hyperparameter.
    #[error("configuration error: {0}")]
    Config(String),

    /// Malformed file contents (bad magic, truncation, shape mismatch on load).
    #[error("format error: {0}")]
    Format(String),

    /// Filesystem failure; includes the offending path.
    #[error("i/o error: {0}")]
    Io(String),

    /// Non-finite value where a finite one is required.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// A value outside its documented domain (e.g. targets outside [0,1]).
    #[error("value error: {0}")]
    Value(String),

    /// Optimizer or training-state misuse (e.g. stepping without gradients).
    #[error("state error: {0}")]
    State(String),
}

impl Error {
    /// Process exit code for the CLI: 2 configuration, 3 I/O or format,
    /// 4 numeric.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Dimension(_) | Error::State(_) => 2,
            Error::Format(_) | Error::Io(_) => 3,
            Error::Numeric(_) | Error::Value(_) => 4,
        }
    }

    pub(crate) fn io(path: &std::path::Path, err: std::io::Error) -> Error {
        Error::Io(format!("{}: {}", path.display(), err))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
