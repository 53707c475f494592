use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("boundary is not defined on degree-0 chains")]
    BoundaryOfDegreeZero,

    #[error("degree mismatch: expected {expected}, got {actual}")]
    DegreeMismatch { expected: usize, actual: usize },

    #[error("not in the augmentation ideal: {0}")]
    NotInAugmentationIdeal(String),

    #[error("coefficient module {0} is not defined for this group")]
    ModuleMismatch(&'static str),

    #[error("exterior cube needs dimension at least 3, got {0}")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspace is not stable under {0}")]
    UnstableSubspace(String),

    #[error("genus {genus} is out of scope: {reason}")]
    GenusOutOfScope { genus: i64, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown mutation {0:?}")]
    UnknownMutation(String),
}
