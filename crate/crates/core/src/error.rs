use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: usize },
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("reflection in the zero vector")]
    ZeroRoot,
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("not an angle between roots of one simple system (ratio {0})")]
    NotRootAngle(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("{0} does not lie in the Cartan part of h")]
    NotInHPart(String),
    #[error("{0} projects to zero in h")]
    ZeroProjection(String),
    #[error("inconsistent transport into block {0}")]
    InconsistentTransport(String),
    #[error("model is not odd (rank gap {0})")]
    NotOddModel(usize),
    #[error("model is not even (rank gap {0})")]
    NotEvenModel(usize),
    #[error("pair class {0} matches no table row")]
    UnmatchedPair(String),
    #[error("malformed two-component model: {0}")]
    MalformedCase2Model(String),
    #[error("quaternion parameter must be nonzero")]
    ZeroParameter,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("data error: {0}")]
    Data(String),
    #[error("singular system")]
    Singular,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
