use crate::scalar::Field;

/// Errors surfaced by parsing, validation, and the exact-arithmetic checks.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("relation of degree {assigned} contains a word of degree {found}")]
    NonHomogeneous { assigned: u32, found: u32 },
    #[error("element has a nonzero constant term")]
    ConstantTerm,
    #[error("zero element")]
    ZeroElement,
    #[error("series has zero constant term, not invertible")]
    NotInvertible,
    #[error("parameter out of range: {0}")]
    ParamOutOfRange(String),
    #[error("relator degree unavailable: {0}")]
    DegreeUnavailable(String),
    #[error("invalid group table: {0}")]
    InvalidTable(String),
    #[error("grid point {0} outside the open interval (0,1)")]
    GridPoint(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            col,
            msg: msg.into(),
        }
    }

    /// True for errors caused by malformed input rather than a violated check.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::Internal(_))
    }
}
