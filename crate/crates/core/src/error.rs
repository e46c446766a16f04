use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(String),

    #[error("morphism does not commute strictly: {0}")]
    NotCommuting(String),

    #[error("square does not commute: b·f differs from g·a")]
    SquareNotCommuting,

    #[error("pair convention mismatch: expected {expected}, found {found}")]
    Convention { expected: String, found: String },

    #[error("parse error at {path}: {message}")]
    Parse { path: String, message: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("at {path}: {source}")]
    At { path: String, source: Box<Error> },
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            message: message.into(),
        }
    }

    /// Attaches an input location.
    pub fn at(self, path: impl Into<String>) -> Self {
        Error::At {
            path: path.into(),
            source: Box::new(self),
        }
    }

    /// The error with any location wrappers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::At { source, .. } => source.root(),
            e => e,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
