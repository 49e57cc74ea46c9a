use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index must have at least one argument")]
    EmptyIndex,

    #[error("argument {position} must be a positive integer, got {value}")]
    NonPositiveArgument { position: usize, value: u32 },

    #[error("level {level} is out of range for a sum of depth {depth}")]
    LevelOutOfRange { level: usize, depth: usize },

    #[error("pivot position {pivot} is out of range 1..={len}")]
    PivotOutOfRange { pivot: usize, len: usize },

    #[error("{0}")]
    Precondition(&'static str),

    #[error("x and s have different lengths ({x} vs {s})")]
    LengthMismatch { x: usize, s: usize },

    #[error("x_{0} is zero")]
    ZeroVariable(usize),

    #[error("the sum of the x_k is zero")]
    ZeroTotal,

    #[error("divergent factor zeta({0})")]
    DivergentFactor(u32),

    #[error("index {0} is not admissible (first argument must be at least 2)")]
    NotAdmissible(String),

    #[error("requested error bound {requested:e} is below the supported floor; achievable bound is {achievable:e}")]
    EpsTooSmall { requested: f64, achievable: f64 },

    #[error("invalid rational {0:?}")]
    InvalidRational(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("cutoff list is empty")]
    NoCutoffs,
}
