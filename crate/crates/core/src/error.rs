use std::fmt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("∞ has no multiplicative inverse")]
    InverseOfInfinity,
    #[error("{op}: undefined for the zero polynomial")]
    ZeroPolynomial { op: &'static str },
    #[error("{op}: evaluation point must be finite")]
    InfiniteArgument { op: &'static str },
    #[error("{op}: degree {degree} outside supported range {low}..={high}")]
    DegreeOutOfRange {
        op: &'static str,
        degree: usize,
        low: usize,
        high: usize,
    },
    #[error("{op}: {reason}")]
    Invalid { op: &'static str, reason: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
}

impl Error {
    pub(crate) fn zero(op: &'static str) -> Self {
        Error::ZeroPolynomial { op }
    }

    /// True for malformed input, as opposed to a well-formed input outside an operation's domain.
    pub fn is_syntax(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

/// Syntax error in a polynomial or scalar literal. `position` is a byte offset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub position: usize,
    pub reason: String,
}

impl ParseError {
    pub(crate) fn new(position: usize, reason: impl Into<String>) -> Self {
        ParseError {
            position,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at position {}: {}", self.position, self.reason)
    }
}

impl std::error::Error for ParseError {}
