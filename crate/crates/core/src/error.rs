use thiserror::Error;

/// Errors produced by graph construction, spectral computations and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("order {n} exceeds the supported ceiling {max}")]
    TooLarge { n: usize, max: usize },
    #[error("graph or parameter too small: {0}")]
    TooSmall(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("zero vector")]
    ZeroVector,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("Fiedler vector structure is inconsistent: {0}")]
    ClassificationInconsistent(String),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph has no cycle")]
    NoCycle,
    #[error("infeasible parameters: {0}")]
    Infeasible(String),
    #[error("branch must have at least two vertices")]
    TrivialBranch,
    #[error("unknown verification target `{0}`")]
    UnknownTarget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
