use thiserror::Error;

use crate::characterize::Verdict;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures of the sequence notation parser. Every variant names the
/// offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty sequence")]
    Empty,
    #[error("zero degree in `{0}` (sequences carry no zero terms)")]
    ZeroDegree(String),
    #[error("negative degree in `{0}`")]
    NegativeDegree(String),
    #[error("zero repeat count in `{0}`")]
    ZeroRepeat(String),
    #[error("malformed item `{0}`")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("degree sequence contains a zero term")]
    ZeroTerm,

    #[error("cannot lay off d_n = {smallest} from a sequence of length {len}")]
    LayOffImpossible { smallest: u32, len: usize },

    #[error("sequence {0} is not graphic")]
    NotGraphic(String),

    #[error("sequence has {len} terms; at least {min} are required")]
    TooShort { len: usize, min: usize },

    #[error("graph has isolated vertices {0:?}")]
    IsolatedVertices(Vec<usize>),

    #[error("invalid edge {u}-{v} in a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("edge {u}-{v} is not present in the host graph")]
    MissingEdge { u: usize, v: usize },

    #[error("malformed graph text at line {line}: {reason}")]
    GraphFormat { line: usize, reason: String },

    #[error("pattern degree {needed} exceeds sequence term {available} at position {position}")]
    ResidualNegative {
        position: usize,
        needed: u32,
        available: u32,
    },

    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),

    #[error("no characterization predicate is available for pattern `{0}`")]
    NoPredicate(String),

    #[error("sequence is not potentially graphic for the pattern: {0}")]
    NegativeVerdict(Verdict),

    #[error("failed to build a realization of {0} despite a positive verdict")]
    RealizationFailed(String),

    #[error("enumeration budget exhausted after {explored} search nodes")]
    BudgetExhausted { explored: u64 },

    #[error("n = {n} exceeds the oracle ceiling of {ceiling}")]
    ExceedsCeiling { n: usize, ceiling: usize },

    #[error("no graphic sequence of length {0} is negative for the pattern")]
    NoNegativeSequence(usize),
}
