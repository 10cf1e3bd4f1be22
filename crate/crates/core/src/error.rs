use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("word `{0}` is not reduced")]
    NotReduced(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("color {color} out of range 2..={max} for generator `{generator}`")]
    ColorOutOfRange {
        generator: String,
        color: usize,
        max: usize,
    },

    #[error("{what} exceeds cap ({limit})")]
    CapExceeded { what: String, limit: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("chamber {0} is outside the ball")]
    NotInBall(String),

    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    pub(crate) fn cap(what: impl Into<String>, limit: usize) -> Self {
        Error::CapExceeded {
            what: what.into(),
            limit,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
