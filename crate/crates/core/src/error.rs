use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Dynkin type: {0}")]
    InvalidType(String),

    #[error("root index {index} out of range (type has {count} positive roots)")]
    RootIndex { index: usize, count: usize },

    #[error("roots {0} and {1} are comparable, so the set is not an antichain")]
    NotAntichain(usize, usize),

    #[error("antichain {0:?} does not belong to this poset")]
    UnknownAntichain(Vec<usize>),

    #[error("element has {found} coordinates, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("expected an element in the {expected} basis, got {found}")]
    BasisMismatch {
        expected: &'static str,
        found: &'static str,
    },

    #[error("point has {found} coordinates, expected {expected}")]
    Dimension { expected: usize, found: usize },

    #[error("point lies on the hyperplane {root}(x) = {level}")]
    Boundary { root: String, level: u8 },

    #[error("point is not in the dominant chamber: {root}(x) = {value}")]
    Chamber { root: String, value: String },

    #[error("cannot parse rational point: {0}")]
    Parse(String),

    #[error("rank {rank} exceeds the default witness-point limit of {limit}; enable large ranks explicitly")]
    RankGuard { rank: usize, limit: usize },

    #[error("{0} out of supported range")]
    OutOfRange(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}
