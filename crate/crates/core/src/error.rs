use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("entries are not pairwise distinct positive integers: {0}")]
    InvalidWord(String),

    #[error("not a permutation of [n]: {0}")]
    NotAPermutation(String),

    #[error("value sets overlap: {0} and {1}")]
    OverlappingValues(String, String),

    #[error("index set {set} is not contained in [{n}]")]
    OutOfRange { set: String, n: usize },

    #[error("{lo} is not below {hi}")]
    NotBelow { lo: String, hi: String },

    #[error("{0} is not an avoider of the congruence system")]
    NotAvoider(String),

    #[error("{set} is not a good set for {perm}")]
    NotGood { set: String, perm: String },

    #[error("dotting {0} is not allowable")]
    NotAllowableDotting(String),

    #[error("{set} is not an allowable set for {sash}")]
    NotAllowableSet { set: String, sash: String },

    #[error("grade mismatch: {left} vs {right}")]
    GradeMismatch { left: usize, right: usize },

    #[error("operation is undefined on the unit sash")]
    UnitSash,

    #[error("invalid sash length {0}")]
    InvalidLength(i64),

    #[error("invalid pattern: {0}")]
    InvalidPattern(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
