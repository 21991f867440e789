use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid weight vector: {0}")]
    Parse(String),

    #[error("weight vector {0} is not well-formed")]
    NotWellFormed(String),

    #[error("weight vector {0} does not have the IP-property")]
    NotIp(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("empty input")]
    EmptyInput,

    #[error("the origin is not an interior point")]
    OriginNotInterior,

    #[error("the unique interior lattice point is not the origin")]
    InteriorPointNotAtOrigin,

    #[error("polytope is not reflexive")]
    NotReflexive,

    #[error("polytope is not almost pseudoreflexive: {0}")]
    NotAlmostPseudoreflexive(String),

    #[error("enumeration exceeds the limit of {0} points")]
    TooManyPoints(usize),

    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
