use thiserror::Error;

/// Errors raised by the digraph, matrix, polynomial and ideal engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc endpoint {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("digraph is not strongly connected")]
    NotStrong,
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("variable context mismatch")]
    ContextMismatch,
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("Groebner basis computation exceeded {limit} pair reductions ({input})")]
    IterationCap { limit: usize, input: String },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("parameters out of range: {0}")]
    Range(String),
    #[error("graph is not symmetric")]
    NotSymmetric,
}

pub type Result<T> = std::result::Result<T, Error>;
