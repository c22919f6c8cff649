use std::collections::BTreeMap;

use exact_arith::{Polynomial, Rational, Ring};
use fts_core::{build_fts, CheckRecord, Report, X_BLOCK, Y_BLOCK};
use poly_linalg::{adjugate, PolyMatrix, PolyVector};
use serde_json::json;

use crate::generate::generate;
use crate::{VarietyError, VarietyId};

/// Shape of `Q` in the adjoint identity for β with `P = E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QShape {
    /// `q11 = −q22 − q33`
    TraceFree,
    /// all nine entries free
    Free,
    /// `Q = 0`; the trace form is degenerate and β is not defined
    Zero,
}

const Q_NAMES: [&str; 9] = ["q11", "q12", "q13", "q21", "q22", "q23", "q31", "q32", "q33"];

/// `β(x, y) + 3ᵗxQ†y + 2(q12q21 + q13q31 + q23q32 + q22² + q22q33 + q33²)ᵗxy`
/// for `P = E`. Returns the residual in the forms ring.
pub fn z12_beta_adjoint_residual(shape: QShape) -> Result<Polynomial, VarietyError> {
    let r = Ring::of(&Q_NAMES);
    let entry = |n: &str| match (shape, n) {
        (QShape::Zero, _) => Ok(Polynomial::zero(&r)),
        (QShape::TraceFree, "q11") => Polynomial::parse(&r, "-q22 - q33"),
        _ => Polynomial::parse(&r, n),
    };
    let q = PolyMatrix::from_fn(&r, 3, 3, |i, j| entry(Q_NAMES[3 * i + j]).expect("entry"));
    let p = PolyMatrix::from_fn(&r, 3, 3, |i, j| Polynomial::constant(&r, if i == j { 1 } else { 0 }));
    let sys = build_fts(&p, &q)?;
    let f = sys.forms_ring();
    let x = PolyVector::from_vars(f, &X_BLOCK)?;
    let y = PolyVector::from_vars(f, &Y_BLOCK)?;
    let beta = x.dot(&sys.beta_matrix().embed(f)?.mul_vec(&y));
    let qdag = adjugate(&q)?.embed(f)?;
    let c = Polynomial::parse(&r, "q12*q21 + q13*q31 + q23*q32 + q22^2 + q22*q33 + q33^2")?;
    let c = match shape {
        QShape::Zero => Polynomial::zero(&r),
        _ => c,
    };
    let c = c.embed(f)?;
    let three = Rational::from(3);
    let two = Rational::from(2);
    Ok(&(&beta + &x.dot(&qdag.mul_vec(&y)).scale(&three)) + &(&c * &x.dot(&y)).scale(&two))
}

/// Checks the adjoint identity for β; a nonzero residual is `IdentityViolation`.
pub fn z12_beta_adjoint_check(shape: QShape) -> Result<Report, VarietyError> {
    let res = z12_beta_adjoint_residual(shape)?;
    if !res.is_zero() {
        return Err(VarietyError::IdentityViolation { identity: "z12_beta_adjoint".into(), residual: res.nterms() });
    }
    let mut report = Report::default();
    report.push(CheckRecord::from_residual("z12.beta_adjoint", 0));
    Ok(report)
}

/// The distinct nonzero equations of U14 (up to scalars, made monic) after
/// setting every weight-1 variable and every variable in `extra_zero` to 0.
/// Sorted by text.
pub fn base_locus_residual(
    weights: &BTreeMap<String, Rational>,
    extra_zero: &[&str],
) -> Result<Vec<Polynomial>, VarietyError> {
    let u14 = generate(VarietyId::U14)?;
    let one = Rational::from(1);
    let ring = u14.ring();
    let mut zeros = Vec::new();
    for n in ring.names() {
        let w = weights.get(n).ok_or_else(|| VarietyError::Dictionary(format!("no weight for {n}")))?;
        if *w == one || extra_zero.contains(&n.as_str()) {
            zeros.push((n.clone(), Polynomial::zero(ring)));
        }
    }
    let subs: Vec<(&str, Polynomial)> = zeros.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
    let mut out: Vec<Polynomial> = Vec::new();
    for (_, f) in u14.equations() {
        let g = f.subs(&subs)?;
        if !g.is_zero() {
            let g = g.monic();
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out.sort_by_key(|p| p.to_text());
    Ok(out)
}

/// The base locus of the weight-1 linear system on U14 is cut out by `{y3², st}`.
pub fn base_locus_check_u14(weights: &BTreeMap<String, Rational>) -> Result<Report, VarietyError> {
    let residual = base_locus_residual(weights, &[])?;
    let ring = generate(VarietyId::U14)?.ring().clone();
    let mut expected = vec![Polynomial::parse(&ring, "y3^2")?, Polynomial::parse(&ring, "s*t")?];
    expected.sort_by_key(|p| p.to_text());
    if residual != expected {
        return Err(VarietyError::BaseLocusMismatch(residual.iter().map(|p| p.to_text()).collect()));
    }
    let mut report = Report::default();
    report.push(
        CheckRecord::from_residual("u14.base_locus", 0)
            .with_details(json!({ "residual": residual.iter().map(|p| p.to_text()).collect::<Vec<_>>() })),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_q_has_no_trace_form() {
        assert!(matches!(
            z12_beta_adjoint_residual(QShape::Zero),
            Err(VarietyError::Fts(fts_core::FtsError::DegenerateTrace { .. }))
        ));
    }
}
