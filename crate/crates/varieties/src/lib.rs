//! Equation systems of the key varieties obtained by specializing the nine
//! strict-regularity equations, the coordinate changes between their
//! presentations, and the checks on charts, group actions and fibers.

mod actions;
mod charts;
mod checks;
mod dictionary;
mod equivalence;
mod generate;
mod papadakis;
mod s8;
mod suite;

pub use actions::{group_action_check, Action};
pub use charts::{
    chart_check, jacobian_rank_at, rank_record, s_chart_points, singular_x_points, singular_y_points, Chart,
};
pub use checks::{
    base_locus_check_u14, base_locus_residual, z12_beta_adjoint_check, z12_beta_adjoint_residual, QShape,
};
pub use dictionary::CoordinateDictionary;
pub use equivalence::{grading_without, verify_presentation_equivalence, Equivalence, Membership};
pub use generate::{
    cl10_alt_dictionary, cl10_dictionary, cl10_ring, cl8_a1a3_dictionary, cl8_a3a4_dictionary, cl9_dictionary,
    cl_ring_without, cl_specialization, f22_ring, f22_template, generate, s8_raw_dictionary, s8_raw_ring,
    s8_renaming, s8_ring, t8_dictionary, t8_ring, template_dictionary, u14_dictionary, u14_ring, z12_dictionary,
    z12_ring, VarietyId, CL_VARS, U14_PARAMS,
};
pub use s8::{
    b6_cone_check, b6_cone_rewrite, s8_fiber, s8_fiber_check, s8_fiber_template, tangential_quartic, tangential_scroll_check, FiberClass,
    ScrollRelation,
};
pub use suite::{
    b6_report, cl8_a1a4_cluster, dictionary_equivalence, dictionary_equivalence_with, equivalence_suite, variety_report,
    EQUIVALENCES,
};
pub use papadakis::{papadakis_cleared, papadakis_images, papadakis_transform, p23_ring, r_involution, LaurentSystem};

use exact_arith::ArithError;
use fts_core::FtsError;
use poly_linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum VarietyError {
    #[error("unknown variety id {0}")]
    UnknownId(String),
    #[error("dictionary error: {0}")]
    Dictionary(String),
    #[error("chart check failed at {label} ({residual})")]
    ChartFailure { label: String, residual: String },
    #[error("claim {claim} violated; remainder {remainder}")]
    ActionViolation { claim: String, remainder: String },
    #[error("D_beta is not proportional to the quartic")]
    NotProportional,
    #[error("identity {identity} violated ({residual} residual terms)")]
    IdentityViolation { identity: String, residual: usize },
    #[error("base locus mismatch: {0:?}")]
    BaseLocusMismatch(Vec<String>),
    #[error("{var} still occurs in {equation}")]
    ResidualDependence { var: String, equation: String },
    #[error(transparent)]
    Fts(#[from] FtsError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl From<poly_linalg::MembershipError> for VarietyError {
    fn from(e: poly_linalg::MembershipError) -> Self {
        VarietyError::Dictionary(e.to_string())
    }
}
