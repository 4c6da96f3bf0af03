use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: shape {shape} has size {shape_size}, cycle type {cycle_type} has size {cycle_size}")]
    SizeMismatch {
        shape: Partition,
        shape_size: usize,
        cycle_type: Partition,
        cycle_size: usize,
    },

    /// A Schur coordinate that must be an integer was not.
    #[error("non-integral coefficient {value} at s_{partition}")]
    NonIntegral { partition: Partition, value: String },

    /// A genuine representation produced a negative multiplicity.
    #[error("negative coefficient {value} at s_{partition}")]
    NegativeCoefficient { partition: Partition, value: String },

    #[error("n = {n} exceeds the scale limit {limit}")]
    ScaleGuard { n: usize, limit: usize },

    #[error("invalid partition text {text:?}: {reason}")]
    ParsePartition { text: String, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed json: {0}")]
    Json(String),
}

impl Error {
    /// True for errors that indicate a computation bug rather than bad input.
    pub fn is_integrity(&self) -> bool {
        matches!(self, Error::NonIntegral { .. } | Error::NegativeCoefficient { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
