use thiserror::Error;

/// Errors raised by the constructors and operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("entry {entry} outside 1..={k}")]
    EntryOutOfRange { entry: i64, k: usize },
    #[error("index {index} outside {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },
    #[error("word has repeated entry {0}")]
    RepeatedEntry(i64),
    #[error("wedge label {0:?} is not strictly decreasing")]
    NonStrictWedge(Vec<usize>),
    #[error("rank mismatch: k = {0} vs k = {1}")]
    RankMismatch(usize, usize),
    #[error("composition {levi:?} does not sum to {n}")]
    CompositionMismatch { levi: Vec<usize>, n: usize },
    #[error("degree cap {cap} exceeded (degree {degree})")]
    DegreeCapExceeded { cap: u32, degree: u32 },
    #[error("matrix does not have an integer spectrum")]
    NonIntegerSpectrum,
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
