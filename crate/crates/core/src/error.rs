use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("points {0} and {1} coincide")]
    DuplicatePoint(usize, usize),

    #[error("point set has affine rank {rank} but must span dimension {dimension}")]
    RankDeficient { rank: usize, dimension: usize },

    #[error("simplex vertices are affinely dependent")]
    DegenerateSimplex,

    #[error("no lifting certifies the subdivision: {0}")]
    NoCertificate(String),

    #[error("subdivision is not a triangulation")]
    NotTriangulation,

    #[error("complexes are not isotopic: {0}")]
    NotIsotopic(String),

    #[error("inconsistent colouring: {0}")]
    Inconsistent(String),

    #[error("invalid painted tree: {0}")]
    InvalidTree(String),

    #[error("resource cap exceeded: {what} > {limit}")]
    ResourceCap { what: String, limit: usize },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    /// Process exit code used by the command line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::ResourceCap { .. } => 3,
            Error::Verification(_) => 4,
            _ => 2,
        }
    }
}
