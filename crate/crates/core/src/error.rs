use thiserror::Error;

use crate::exactnum::IntVec;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error("zero vector has no primitive form")]
    ZeroVector,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("coordinate index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("face lattice requires pointed cone")]
    NotPointed,

    #[error("face lattice of the zero cone is empty")]
    ZeroCone,

    #[error("cone is not contained in the non-negative orthant")]
    NotInOrthant,

    #[error("cone is not contained in the enclosing cone; witness ray {witness}")]
    NotContained { witness: IntVec },

    #[error("exponent entries must be non-negative")]
    NegativeExponent,

    #[error("point coordinate {index} lies outside [0,1]")]
    CoordinateOutOfRange { index: usize },

    #[error("ambient dimension {n} exceeds the support enumeration cap {cap}")]
    SupportCapExceeded { n: usize, cap: usize },

    #[error("cell is not part of the complex")]
    CellNotInComplex,

    #[error("exponent {0} is too large to evaluate")]
    ExponentTooLarge(String),

    #[error("malformed input at `{field}`: {message}")]
    Malformed { field: String, message: String },

    #[error("internal contract violation: {0}")]
    ContractViolation(String),
}

pub type Result<T> = std::result::Result<T, ToricError>;

impl ToricError {
    pub(crate) fn malformed(field: impl Into<String>, message: impl Into<String>) -> Self {
        ToricError::Malformed {
            field: field.into(),
            message: message.into(),
        }
    }
}
