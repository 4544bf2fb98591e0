use thiserror::Error;

/// Errors raised by the verification kernel.
///
/// Check failures are not errors: they are recorded as verdicts in a
/// [`Report`](crate::report::Report). Errors signal invalid input, an
/// operation that cannot be decided over the chosen base field, or an
/// internal self-test that caught a construction bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("operation not supported over {0}")]
    UnsupportedField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("no antipode: the convolution-inverse system is inconsistent")]
    NoAntipode,
    #[error("integral space has dimension {0}, expected 1")]
    IntegralSpaceNotOneDimensional(usize),
    #[error("convention self-test failed: {0}")]
    ConventionSelfTestFailed(String),
    #[error("Drinfeld element is not invertible")]
    DrinfeldElementNotInvertible,
    #[error("no invertible solution found after {0} attempts")]
    NoInvertibleSolutionFound(usize),
    #[error("extension inconsistent: {0}")]
    ExtensionInconsistent(String),
    #[error("undecided: {0}")]
    Undecided(String),
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("representation is not a split simple: {0}")]
    NotSplitSimple(String),
    #[error("intertwining failed: {0}")]
    IntertwiningFailed(String),
    #[error("associativity failed: {0}")]
    AssociativityFailed(String),
    #[error("socle is not simple (dimension {0})")]
    SocleNotSimple(usize),
    #[error("dimension guard: {0} exceeds the limit {1}")]
    DimensionLimit(usize, usize),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
