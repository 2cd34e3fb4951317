use thiserror::Error;

/// Errors raised by contract checks throughout the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("size limit exceeded: {what} needs {requested}, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("state is not normalized (norm^2 = {norm_sqr})")]
    NotNormalized { norm_sqr: f64 },

    #[error("invalid subsystem selection: {0}")]
    InvalidSubsystem(String),

    #[error(
        "operator {index} is linearly dependent on its predecessors (residual ratio {ratio:e})"
    )]
    RankDeficient { index: usize, ratio: f64 },

    #[error("invalid observable basis: {0}")]
    InvalidBasis(String),

    #[error("basis `{0}` has no normalization constant; calibrate it first")]
    Uncalibrated(String),

    #[error("reference state has vanishing projection onto the algebra (sum of squares {0:e})")]
    DegenerateReference(f64),

    #[error("not a valid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("out of scope: {0}")]
    OutOfScope(String),

    #[error("eigensolver failed to converge after {0} iterations")]
    NoConvergence(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
