use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("singular matrix")]
    SingularMatrix,

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid fusion ring: {0}")]
    InvalidRing(String),

    #[error("invalid skeletal data: {0}")]
    InvalidData(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("undefined value: {0}")]
    UndefinedValue(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("search budget of {bound} candidate assignments exceeded")]
    BudgetExceeded { bound: u64 },

    #[error("vacuum normalization failed: {0}")]
    Vacuum(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(offset: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::parse(e.column(), format!("json line {}: {}", e.line(), e))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
