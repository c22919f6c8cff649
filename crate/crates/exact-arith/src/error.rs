use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("derivative blocks differ in length or overlap")]
    BlockMismatch,
    #[error("division by zero")]
    DivideByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("duplicate variable {0}")]
    DuplicateVariable(String),
    #[error("image of {0} is not invertible")]
    NotInvertible(String),
    #[error("parse error: {0}")]
    Parse(String),
}
