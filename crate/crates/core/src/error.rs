use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("{op} requires G1 to have at least one edge")]
    NoEdges { op: &'static str },

    #[error("G1 must be regular ({0})")]
    NotRegular(String),

    #[error("G1 must be connected")]
    Disconnected,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is singular at the requested point")]
    Singular,

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("root refinement did not converge: {0}")]
    NoConvergence(String),

    #[error("polynomial has non-real roots (max |imag| = {0:e})")]
    ComplexRoots(f64),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("degree accounting failed: expected order {expected}, factorization has {actual}")]
    DegreeAccounting { expected: usize, actual: usize },

    #[error("reconciliation failed: {0}")]
    Reconciliation(String),

    #[error("size cap exceeded: {n} > {cap}")]
    SizeCap { n: usize, cap: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
