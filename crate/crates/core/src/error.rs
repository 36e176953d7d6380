use thiserror::Error;

/// Errors raised by the library.
///
/// `Parse` marks malformed textual input (group names, flag lists, windows);
/// every other variant is a violated mathematical precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: lengths {left} and {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("genus must be at least 2, got {0}")]
    GenusTooSmall(i64),

    #[error("degenerate parabolic: P = G has no quotient roots")]
    DegenerateParabolic,

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid parabolic: {0}")]
    InvalidParabolic(String),

    #[error("numerical type has {got} block degrees, parabolic has {expected} GL blocks")]
    BlockCountMismatch { expected: usize, got: usize },

    #[error("parameter out of range: {0}")]
    ParameterRange(String),

    #[error("degrees sum to {sum}, expected topological type {delta}")]
    SumMismatch { sum: i64, delta: i64 },

    #[error("topological type {value} does not lie in pi1({group})")]
    NotInGroup { value: String, group: String },

    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),

    #[error("group mismatch: expected {expected}, got {got}")]
    GroupMismatch { expected: String, got: String },

    #[error("empty window")]
    EmptyWindow,

    #[error("internal consistency violation: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
