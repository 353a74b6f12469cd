use thiserror::Error;

/// Errors raised by word constructions, recognizers and the verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}; words are spelled with 'a' and 'b'")]
    InvalidLetter(char),

    #[error("a period must be at least 1")]
    ZeroPeriod,

    #[error("word does not have period {0}")]
    MissingPeriod(usize),

    #[error("word of length {len} exceeds the materialization limit of {limit} letters")]
    TooLong { len: usize, limit: usize },

    #[error("word is not central")]
    NotCentral,

    #[error("word is not standard")]
    NotStandard,

    #[error("word is not a Christoffel word")]
    NotChristoffel,

    #[error("a single letter has no Christoffel factorization")]
    LetterFactorization,

    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: u64, q: u64 },

    #[error("invalid coefficient list: {0}")]
    InvalidCoefficients(String),

    #[error("non-canonical integral representation: {0}")]
    NonCanonical(String),

    #[error(
        "malformed directive spec {0:?}; expected \"preperiod|period\" with a non-empty period"
    )]
    MalformedSpec(String),

    #[error("Fibonacci index {0} is below -1")]
    FibonacciIndex(i64),

    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },

    #[error("order {order} is below the minimum {min} for this statement")]
    OrderTooSmall { order: usize, min: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidLetter(_) => "invalid_letter",
            Error::ZeroPeriod => "zero_period",
            Error::MissingPeriod(_) => "missing_period",
            Error::TooLong { .. } => "too_long",
            Error::NotCentral => "not_central",
            Error::NotStandard => "not_standard",
            Error::NotChristoffel => "not_christoffel",
            Error::LetterFactorization => "letter_factorization",
            Error::NotCoprime { .. } => "not_coprime",
            Error::InvalidCoefficients(_) => "invalid_coefficients",
            Error::NonCanonical(_) => "non_canonical",
            Error::MalformedSpec(_) => "malformed_spec",
            Error::FibonacciIndex(_) => "fibonacci_index",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::OrderTooSmall { .. } => "order_too_small",
            Error::Parse(_) => "parse",
            Error::Invariant(_) => "invariant",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
