use alloc::string::String;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge index {index} out of range for a graph with {len} edges")]
    InvalidEdge { index: usize, len: usize },
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graphs are limited to {max} {what}, got {got}")]
    TooLarge { what: &'static str, max: usize, got: usize },
    #[error("vertex weights must be positive, expected {expected} weights")]
    InvalidWeights { expected: usize },
    #[error("edge set is not a forest")]
    NotAForest,
    #[error("edge set is not a member of the broken circuit complex")]
    NotInComplex,
    #[error("edge set has an empty boundary")]
    EmptyBoundary,
    #[error("vertex list is not a clique: {0}")]
    NotAClique(String),
    #[error("polynomial of degree {degree} exceeds bound {bound}")]
    DegreeBound { degree: usize, bound: usize },
    #[error("polynomial has degree {got}, expected {expected}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("partition size {got} does not match total weight {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("basis mismatch: expected {expected}, got {got}")]
    BasisMismatch { expected: String, got: String },
    #[error("basis {0} is not registered")]
    UnknownBasis(String),
    #[error("degree {degree} exceeds the registered depth {depth} of basis {basis}")]
    DegreeExceeded { basis: String, degree: usize, depth: usize },
    #[error("invalid graph family {family}: {reason}")]
    InvalidFamily { family: String, reason: String },
    #[error("transition matrix of degree {0} is singular")]
    Singular(usize),
    #[error("not a connected partition of the vertex set")]
    NotConnectedPartition,
    #[error("partition parts must be positive")]
    InvalidPartition,
    #[error("too few variables: {vars} < degree {degree}")]
    TooFewVariables { vars: usize, degree: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
