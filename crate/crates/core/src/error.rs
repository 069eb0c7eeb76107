use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("pair {{{0}, {1}}} listed more than once")]
    DuplicatePair(usize, usize),
    #[error("underlying graph is not connected")]
    Disconnected,
    #[error("a mixed graph needs at least two vertices (got {0})")]
    TooFewVertices(usize),
    #[error("vertex count {0} exceeds the supported maximum {1}")]
    TooManyVertices(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),

    #[error("division by zero in a cyclotomic field")]
    DivisionByZero,
    #[error("floating-point angles have no exact cyclotomic representation")]
    NumericAngle,

    #[error("exact normalized Hermitian matrix requires a regular graph; use the D^-1 H route")]
    NonRegularExactNormalization,
    #[error("index spaces do not match: {0}")]
    IndexSpaceMismatch(String),
    #[error("eigenvalue iteration did not converge")]
    EigenSolver,

    #[error("j = {j} outside 0..={max}")]
    JOutOfRange { j: usize, max: usize },
    #[error("inherited factor routes disagree at coefficient {0}")]
    ImplementationMismatch(String),

    #[error("graph is not regular")]
    NotRegular,
    #[error("graph has one-directional arcs")]
    NotUndirected,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial has non-integer coefficients")]
    NotIntegerCoefficients,

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("n = {0} is too large for exhaustive enumeration (max {1})")]
    NTooLarge(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
