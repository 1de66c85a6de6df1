use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("illegal character {found:?} at position {position}")]
    IllegalCharacter { position: usize, found: char },
    #[error("path goes below zero at position {position}")]
    NegativePrefix { position: usize },
    #[error(
        "unbalanced word: {ups} N steps and {downs} S steps (checked up to position {position})"
    )]
    Unbalanced {
        position: usize,
        ups: usize,
        downs: usize,
    },
    #[error("empty path: sizes must be at least 1")]
    EmptyPath,
    #[error("descent vector is not a Dyck path: prefix sum exceeds index at {index}")]
    InvalidDescents { index: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("pair is not a Stanley interval: delta is negative at index {index}")]
    NotStanleyInterval { index: usize },
    #[error("unknown lattice {0:?} (expected stanley, tamari or kreweras)")]
    UnknownLattice(String),
    #[error("paths are not comparable in the {0} lattice")]
    NotComparable(&'static str),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition is crossing: {a} < {b} < {c} < {d}")]
    CrossingPartition {
        a: usize,
        b: usize,
        c: usize,
        d: usize,
    },
    #[error("block not in partition")]
    UnknownBlock,
    #[error("size {n} exceeds the configured limit {limit}")]
    LimitExceeded { n: usize, limit: usize },
    #[error("malformed map: {0}")]
    MalformedMap(String),
    #[error("invalid realizer: {0}")]
    InvalidRealizer(String),
    #[error("vertex {vertex} is not an internal vertex of degree 3")]
    NotDegreeThree { vertex: usize },
    #[error("triangulation is not stack")]
    NotStack,
    #[error("corner classification failed: {0}")]
    CornerClassification(String),
}
