use thiserror::Error;

use crate::check::Validation;
use crate::fincat::StructureError;
use crate::search::CapExceeded;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure classes shared by every module.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error("boundary mismatch: {0}")]
    Boundary(String),
    #[error("orientation error: {0}")]
    Orientation(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("unsatisfied hypothesis: {0}")]
    Hypothesis(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("{0}")]
    Invalid(Validation),
}

impl Error {
    pub(crate) fn boundary(msg: impl Into<String>) -> Self {
        Error::Boundary(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    pub(crate) fn hypothesis(msg: impl Into<String>) -> Self {
        Error::Hypothesis(msg.into())
    }
}
