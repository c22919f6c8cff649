use exact_arith::{Polynomial, Ring};
use fts_core::{CheckRecord, EquationSystem, Report, Status};
use poly_linalg::{span_dimension, DegreeBound, MacaulayBasis, MembershipCertificate, MembershipError};
use serde_json::json;

use crate::dictionary::CoordinateDictionary;
use crate::VarietyError;

/// Outcome for one equation of one side.
#[derive(Clone, Debug)]
pub struct Membership {
    pub label: String,
    pub certificate: Option<MembershipCertificate>,
}

/// Mutual membership of two presentations after substitution.
#[derive(Clone, Debug)]
pub struct Equivalence {
    pub name: String,
    /// equations of `b`, substituted, in the ideal of `a`
    pub b_in_a: Vec<Membership>,
    /// equations of `a` in the ideal of the substituted `b`
    pub a_in_b: Vec<Membership>,
    /// every substituted equation of `b` is a ℚ-combination of the equations of `a`, and conversely
    pub linear: bool,
}

impl Equivalence {
    pub fn equivalent(&self) -> bool {
        self.b_in_a.iter().chain(&self.a_in_b).all(|m| m.certificate.is_some())
    }

    pub fn missing(&self) -> Vec<String> {
        let side = |v: &[Membership], tag: &str| -> Vec<String> {
            v.iter().filter(|m| m.certificate.is_none()).map(|m| format!("{tag}:{}", m.label)).collect()
        };
        let mut out = side(&self.b_in_a, "b_in_a");
        out.extend(side(&self.a_in_b, "a_in_b"));
        out
    }

    pub fn to_record(&self) -> CheckRecord {
        let missing = self.missing();
        let status = if missing.is_empty() { Status::Pass } else { Status::Inconclusive };
        CheckRecord::with_status(self.name.clone(), status, missing.len()).with_details(json!({
            "missing": missing,
            "linear": self.linear,
            "max_cofactor_degree": self
                .b_in_a
                .iter()
                .chain(&self.a_in_b)
                .filter_map(|m| m.certificate.as_ref()?.max_cofactor_degree())
                .max(),
        }))
    }

    pub fn to_report(&self) -> Report {
        Report(vec![self.to_record()])
    }
}

/// Grading with the listed variables in degree 0 and all others in degree 1.
pub fn grading_without(ring: &Ring, degree_zero: &[&str]) -> Vec<u32> {
    ring.names().iter().map(|n| if degree_zero.contains(&n.as_str()) { 0 } else { 1 }).collect()
}

fn certify_all(gens: &[Polynomial], targets: &[(String, Polynomial)], bound: &DegreeBound) -> Result<Vec<Membership>, VarietyError> {
    let ring = gens[0].ring();
    let all: Vec<usize> = (0..ring.nvars()).collect();
    let basis = MacaulayBasis::new(gens, bound.clone(), &all)?;
    targets
        .iter()
        .map(|(l, t)| {
            let certificate = if t.is_zero() {
                Some(MembershipCertificate {
                    target: t.clone(),
                    generators: gens.to_vec(),
                    degree_bound: bound.bound,
                    cofactors: Some(vec![Polynomial::zero(ring); gens.len()]),
                })
            } else {
                match basis.certify(t) {
                    Ok(c) => Some(c),
                    Err(MembershipError::NotFoundUpToBound) | Err(MembershipError::BoundTooSmall { .. }) => None,
                    Err(e) => return Err(e.into()),
                }
            };
            Ok(Membership { label: l.clone(), certificate })
        })
        .collect()
}

/// Substitutes `dict` (which maps `b`'s ring into `a`'s) into `b` and certifies
/// mutual degree-bounded membership against `a`.
pub fn verify_presentation_equivalence(
    name: &str,
    a: &EquationSystem,
    b: &EquationSystem,
    dict: &CoordinateDictionary,
    bound: &DegreeBound,
) -> Result<Equivalence, VarietyError> {
    if !dict.source_ring.same(a.ring()) {
        return Err(VarietyError::Dictionary(format!("{}: source ring differs from {}", dict.name, a.name)));
    }
    let bsub = dict.apply_system(b, &b.name)?;
    let a_gens: Vec<Polynomial> = a.polynomials().into_iter().filter(|p| !p.is_zero()).collect();
    let b_gens: Vec<Polynomial> = bsub.polynomials().into_iter().filter(|p| !p.is_zero()).collect();
    if a_gens.is_empty() || b_gens.is_empty() {
        return Err(VarietyError::Dictionary(format!("{name}: empty system")));
    }
    let b_in_a = certify_all(&a_gens, bsub.equations(), bound)?;
    let a_in_b = certify_all(&b_gens, a.equations(), bound)?;
    let da = span_dimension(&a_gens);
    let db = span_dimension(&b_gens);
    let joint: Vec<Polynomial> = a_gens.iter().chain(&b_gens).cloned().collect();
    let linear = span_dimension(&joint) == da && da == db;
    Ok(Equivalence { name: name.to_string(), b_in_a, a_in_b, linear })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toy_presentations() {
        let r = Ring::of(&["x", "y", "z"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let a = EquationSystem::unlabelled("a", &r, vec![p("x*y - z"), p("x^2 - y")]).unwrap();
        let b = EquationSystem::unlabelled("b", &r, vec![p("x*y - z + x^2 - y"), p("x^2 - y")]).unwrap();
        let id = CoordinateDictionary::identity(&r);
        let e = verify_presentation_equivalence("toy", &a, &b, &id, &DegreeBound::total(3)).unwrap();
        assert!(e.equivalent());
        assert!(e.linear);
        let c = EquationSystem::unlabelled("c", &r, vec![p("x*y + z"), p("x^2 - y")]).unwrap();
        let e = verify_presentation_equivalence("toy", &a, &c, &id, &DegreeBound::total(3)).unwrap();
        assert!(!e.equivalent());
        assert_eq!(e.to_record().status, Status::Inconclusive);
    }
}
