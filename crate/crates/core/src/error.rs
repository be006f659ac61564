use thiserror::Error;

/// Errors raised by braid arithmetic, the order comparator and the certifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand mismatch: {left} strands vs {right} strands")]
    StrandMismatch { left: usize, right: usize },

    #[error("a braid needs at least 2 strands, got {0}")]
    BadStrands(usize),

    #[error("generator {letter} is out of range for {strands} strands")]
    BadGenerator { letter: i64, strands: usize },

    #[error("braid word of {len} letters exceeds the limit of {max}")]
    WordTooLong { len: usize, max: usize },

    #[error("handle reduction produced {len} letters, over the budget of {max}")]
    ReductionBudgetExceeded { len: usize, max: usize },

    #[error("expected a 3-strand braid, got {0} strands")]
    NotThreeBraid(usize),

    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("genus must be at least 1, got {0}")]
    BadGenus(i64),

    #[error("the closed braid of the monodromy is a split link (central exponent 0, reducible)")]
    SplitBinding,

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
}

impl Error {
    /// Stable variant name, used in structured reports.
    pub fn name(&self) -> &'static str {
        match self {
            Error::StrandMismatch { .. } => "StrandMismatch",
            Error::BadStrands(_) => "BadStrands",
            Error::BadGenerator { .. } => "BadGenerator",
            Error::WordTooLong { .. } => "WordTooLong",
            Error::ReductionBudgetExceeded { .. } => "ReductionBudgetExceeded",
            Error::NotThreeBraid(_) => "NotThreeBraid",
            Error::BadParameters(_) => "BadParameters",
            Error::BadGenus(_) => "BadGenus",
            Error::SplitBinding => "SplitBinding",
            Error::Parse { .. } => "ParseError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
