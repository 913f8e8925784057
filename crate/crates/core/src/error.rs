use alloc::string::String;
use alloc::vec::Vec;

/// Errors raised by the algebra, graph and geometry routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("coefficient domains differ: {0}")]
    DomainMismatch(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial vanishes modulo {0}")]
    VanishesModP(u64),
    #[error("zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("degree {degree} is below the minimum {min}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("degree {degree} exceeds the engine limit {limit}")]
    Unsupported { degree: usize, limit: usize },
    #[error("invalid transform: {0}")]
    InvalidTransform(String),
    #[error("{0} divides the discriminant")]
    PrimeDividesDiscriminant(u64),
    #[error("irreducibility could not be decided")]
    Undetermined,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("vertices {0} and {1} coincide")]
    Coincident(usize, usize),
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NoConvergence {
        iterations: usize,
        residual: f64,
        /// Iterate at which the solver stopped, one point per vertex.
        last: Vec<[f64; 2]>,
    },
    #[error("geometry: {0}")]
    Geometry(String),
    #[error("pipeline check failed: {0}")]
    Pipeline(String),
}

pub type Result<T> = core::result::Result<T, Error>;
