use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation is not an involution")]
    NotInvolution,
    #[error("permutation contains the pattern {0}")]
    ContainsPattern(String),
    #[error("permutation is not a direct sum of blocks 1 and 21")]
    NotFibonacci,
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("tableau shapes differ")]
    ShapeMismatch,
    #[error("path is not a Dyck path prefix")]
    NotPrefix,
    #[error("path is not a Grand Dyck path")]
    NotGrand,
    #[error("path is not a Dyck path")]
    NotDyck,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition does not fit inside the box")]
    DoesNotFit,
    #[error("invalid hook set: consecutive entries must differ by more than 1")]
    InvalidHookSet,
    #[error("integer overflow in exact arithmetic")]
    Overflow,
    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,
    #[error("enumeration limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("no structural enumeration backend for class {0}")]
    NoStructuralBackend(String),
    #[error("unknown {kind}: {name}")]
    Unknown { kind: &'static str, name: String },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
