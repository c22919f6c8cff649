//! Vectors and matrices over polynomial rings: cross products, minors,
//! Pfaffians, exact rank, and degree-bounded ideal membership.

mod elim;
mod macaulay;
mod matrix;
mod ops;

pub use elim::{
    bareiss_integer, clear_denominators, coefficient_matrix, nullspace, poly_matrix_rank, rational_rank, rref,
    span_dimension,
};
pub use macaulay::{
    macaulay_membership, monomials_up_to, reduce_mod_principal, DegreeBound, MacaulayBasis, MembershipCertificate,
    MembershipError,
};
pub use matrix::{PolyMatrix, PolyVector};
pub use ops::{adjugate, cross_product, det, det_adj_trace, pfaffian, pfaffians_4x4, trace, wedge2};

use exact_arith::ArithError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("vectors must have length 3")]
    LengthMismatch,
    #[error("shape error: {0}")]
    ShapeError(String),
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error(transparent)]
    Arith(#[from] ArithError),
}
