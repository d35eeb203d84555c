use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field elements belong to different moduli ({0} and {1})")]
    ContextMismatch(u32, u32),

    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    /// A structural statement that should hold on the given input did not.
    /// `statement` names the statement being checked.
    #[error("theorem violation [{statement}]: {detail}")]
    TheoremViolation { statement: String, detail: String },

    #[error("invalid trace form: {0}")]
    InvalidTrace(String),

    #[error("algebra is not commutative: {0}")]
    NonCommutative(String),

    /// Internal consistency failure; indicates a bug rather than bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn violation(statement: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::TheoremViolation {
            statement: statement.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
