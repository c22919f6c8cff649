use std::collections::BTreeMap;

use exact_arith::{Polynomial, Rational};
use fts_core::EquationSystem;
use serde_json::{json, Value};

use crate::{form_text, LinearForm, WeightAssignment, WeightError, WeightSolution};

/// Degrees of the first syzygy module, as monomial labels.
pub const P1_LABELS: [&str; 9] = ["x1*y3", "x2*y3", "s*x1", "s*x2", "s*x3", "t*y1", "t*y2", "t*y3", "s*t"];

#[derive(Debug, Clone, PartialEq)]
pub struct GradedDegreeReport {
    /// sorted
    pub equation_degrees: Vec<Rational>,
    pub delta: Rational,
    pub ambient_canonical_twist: Rational,
    pub variety_canonical_twist: Rational,
    /// sorted
    pub p1_degrees: Vec<Rational>,
    /// sorted
    pub p3_degrees: Vec<Rational>,
    /// `{δ − d : d ∈ equation_degrees}` equals the P3 degrees
    pub duality: bool,
}

impl GradedDegreeReport {
    pub fn to_json(&self) -> Value {
        let txt = |v: &[Rational]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>();
        json!({
            "equation_degrees": txt(&self.equation_degrees),
            "delta": self.delta.to_string(),
            "ambient_canonical_twist": self.ambient_canonical_twist.to_string(),
            "variety_canonical_twist": self.variety_canonical_twist.to_string(),
            "p1_degrees": txt(&self.p1_degrees),
            "p3_degrees": txt(&self.p3_degrees),
            "duality": self.duality,
        })
    }
}

fn label_weight(sys: &EquationSystem, w: &WeightAssignment, label: &str) -> Result<Rational, WeightError> {
    let p = Polynomial::parse(sys.ring(), label)?;
    let (m, _) = &p.terms()[0];
    w.monomial_weight(sys.ring(), m)
}

/// Degree bookkeeping for the 14-dimensional system under `w`.
pub fn graded_report(sys: &EquationSystem, w: &WeightAssignment) -> Result<GradedDegreeReport, WeightError> {
    let mut equation_degrees = Vec::new();
    for (label, f) in sys.equations() {
        match w.degree_of(f)? {
            Some(d) => equation_degrees.push(d),
            None => return Err(WeightError::NotHomogeneous(label.clone())),
        }
    }
    equation_degrees.sort();
    let g = |v: &str| w.get(v).cloned();
    let q = |n: i64| Rational::from(n);
    let (x1, x2, x3, y1, y2, y3) = (g("x1")?, g("x2")?, g("x3")?, g("y1")?, g("y2")?, g("y3")?);
    let x12 = &x1 + &x2;
    let y12 = &y1 + &y2;
    let delta = &(&(&(&q(2) * &x12) - &x3) - &y12) + &(&q(5) * &y3);
    let ambient_canonical_twist = -w.sum(sys.ring().names())?;
    let variety_canonical_twist =
        &(&(&(&q(-2) * &x12) + &(&q(4) * &y12)) + &(&q(3) * &x3)) - &(&q(9) * &y3);
    let mut p1_degrees = P1_LABELS.iter().map(|l| label_weight(sys, w, l)).collect::<Result<Vec<_>, _>>()?;
    p1_degrees.sort();
    let mut p3_degrees: Vec<Rational> = p1_degrees.iter().map(|d| &delta - d).collect();
    p3_degrees.sort();
    let mut dual: Vec<Rational> = equation_degrees.iter().map(|d| &delta - d).collect();
    dual.sort();
    let duality = dual == p3_degrees;
    Ok(GradedDegreeReport {
        equation_degrees,
        delta,
        ambient_canonical_twist,
        variety_canonical_twist,
        p1_degrees,
        p3_degrees,
        duality,
    })
}

fn form_of(sys: &EquationSystem, param: &BTreeMap<String, LinearForm>, p: &Polynomial) -> LinearForm {
    let mut out = LinearForm::new();
    let (m, _) = &p.terms()[0];
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        for (f, c) in &param[&sys.ring().names()[i]] {
            let slot = out.entry(f.clone()).or_default();
            *slot += &(c * &Rational::from(e as i64));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Equation degrees and the P1 label degrees as linear forms in the free block
/// of `sol`, sorted by text; the degree pattern holds for every admissible
/// weight exactly when the two lists agree.
pub fn symbolic_duality(sys: &EquationSystem, sol: &WeightSolution) -> Result<(Vec<String>, Vec<String>), WeightError> {
    let param = sol.parametrization.as_ref().ok_or_else(|| WeightError::NotAFreeBlock(vec![]))?;
    let mut eqs: Vec<String> =
        sys.polynomials().iter().filter(|p| !p.is_zero()).map(|p| form_text(&form_of(sys, param, p))).collect();
    let mut labels = Vec::new();
    for l in P1_LABELS {
        let p = Polynomial::parse(sys.ring(), l)?;
        labels.push(form_text(&form_of(sys, param, &p)));
    }
    eqs.sort();
    labels.sort();
    Ok((eqs, labels))
}
