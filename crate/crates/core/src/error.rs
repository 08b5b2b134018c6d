use thiserror::Error;

use crate::partition::Partition;
use crate::symfunc::Basis;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative part {0} in partition input")]
    NegativePart(i64),

    #[error("dominance compares partitions of equal size, got {0} and {1}")]
    SizeMismatch(Partition, Partition),

    #[error("cannot add a {0}-basis function to a {1}-basis function")]
    BasisMismatch(Basis, Basis),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("coefficient {0} is not an integer")]
    NotIntegral(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
