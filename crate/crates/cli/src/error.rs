use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] freeab::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// 1: parse or validation, 2: dimension or ring mismatch, 3: invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e.root() {
                freeab::Error::Dimension(_) | freeab::Error::RingMismatch { .. } => 2,
                freeab::Error::Invariant(_) => 3,
                _ => 1,
            },
            CliError::Io { .. } | CliError::Usage(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
