use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a remainder")]
    NotDivisible,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("vertex ({0}, {1}) is not in the graph")]
    VertexNotInGraph(i32, i32),

    #[error("invalid tiling: {0}")]
    InvalidTiling(String),

    #[error("index {index} out of range 1..={max}")]
    Index { index: usize, max: usize },

    #[error("Pfaffian of a matrix of odd order {0}")]
    OddOrder(usize),

    #[error("leading principal Pfaffian of order {order} vanishes")]
    SingularPrincipalMinor { order: usize },

    #[error("index set {0} is not of the form [2d-2] ∪ {{i, j}}")]
    UnsupportedIndexSet(String),

    #[error("path-count matrix is {rows}x{cols}, expected square")]
    ShapeMismatch { rows: usize, cols: usize },

    #[error("product form fails at n = {n}: Pfaffian {pfaffian} is not divisible by {divisor}")]
    ConjectureViolated {
        n: usize,
        pfaffian: String,
        divisor: String,
    },

    #[error("constructions disagree at entry ({i}, {j}): {left} != {right}")]
    ConstructionMismatch {
        i: usize,
        j: usize,
        left: String,
        right: String,
    },

    #[error("property fails: {0}")]
    PropertyViolated(String),

    #[error("order {n} exceeds the exhaustive-search guard of {limit}; pass --force to override")]
    SizeGuard { n: usize, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
