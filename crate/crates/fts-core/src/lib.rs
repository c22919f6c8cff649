//! Freudenthal triple systems built from a pair of 3×3 matrices: norms, trace
//! form, triple product, symplectic form, the quartic, and the identity checks
//! that tie them together.

mod checks;
mod equations;
mod point;
mod report;
mod system;
mod tensor;
mod view;

pub use checks::{
    axiom_check, delta_span, delta_span_dim, identity_suite, peirce_spectrum, streg_consistency, streg_equations,
    streg_equations_in, AxiomMode, PeirceSpectrum,
};
pub use equations::EquationSystem;
pub use point::{point_names, FtsPoint};
pub use report::{CheckRecord, Report, Status};
pub use system::{
    build_fts, diagonal_pair, parametric_pair, parse_pair, random_pairs, random_systems, rational_pair, FtsSystem,
    X_BLOCK, Y_BLOCK,
};
pub use view::{FtsView, Side};

use exact_arith::ArithError;
use poly_linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum FtsError {
    #[error("matrices must be 3x3 and vectors of length 3")]
    Shape,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("variable name {0} is reserved")]
    ReservedName(String),
    #[error("componentwise quotients for N_{0} disagree")]
    InconsistentDivision(String),
    #[error("trace form is underdetermined (solution space dimension {nullity})")]
    DegenerateTrace { nullity: usize },
    #[error("trace form has non-polynomial entries")]
    NonPolynomialTrace,
    #[error("trace form system is inconsistent")]
    InconsistentTrace,
    #[error("probe point has N_x = 0")]
    BadProbe,
    #[error("axiom {name} violated ({witness})")]
    AxiomViolation { name: String, witness: String },
    #[error("identity {label} violated ({residual})")]
    IdentityViolation { label: String, residual: String },
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
