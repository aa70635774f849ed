use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mismatched radicands: sqrt({left}) vs sqrt({right})")]
    MismatchedRadicand { left: String, right: String },

    #[error("radicand {0} is a perfect square; use the integer code path")]
    SquareRadicand(String),

    #[error("radicand {0} is out of range (need w >= 4)")]
    RadicandOutOfRange(String),

    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),

    #[error("polynomial {0} is not monic")]
    NotMonic(String),

    #[error("polynomial {0} does not have integer coefficients")]
    NonIntegerPolynomial(String),

    #[error("point ({x}, {y}) is not on {conic}")]
    NotOnConic { conic: String, x: String, y: String },

    #[error("invalid coordinates: {0}")]
    InvalidCoordinates(String),

    #[error("descent from ({x}, {y}) is not exact: {x} does not divide {numerator}")]
    InexactDescent { x: String, y: String, numerator: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot parse {input:?}: {message}")]
    Syntax { input: String, message: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid A-number {0:?}")]
    InvalidANumber(String),

    #[error("no fixture for {0}")]
    MissingFixture(String),

    #[error("fixture {a_number} has {available} terms, {needed} needed")]
    FixtureTooShort { a_number: String, available: usize, needed: usize },

    #[error("network access is disabled (offline); enable fetching explicitly")]
    Offline,

    #[error("network error: {0}")]
    Network(String),

    #[error("HTTP status {status} for {url}")]
    Http { status: u16, url: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
