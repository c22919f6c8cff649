//! Weight assignments making an equation system homogeneous: the linear
//! constraints, their exact solution space, and graded degree bookkeeping for
//! the 14-dimensional key variety.

mod graded;
mod solve;
pub mod tables;

use std::collections::BTreeMap;

use exact_arith::{Monomial, Polynomial, Rational, Ring};
use serde_json::{json, Value};

pub use graded::{graded_report, symbolic_duality, GradedDegreeReport, P1_LABELS};
pub use solve::{solve_weights, weight_constraints, LinearRelation, WeightConstraintSystem, WeightSolution};

/// Linear form in the weights of a set of variables.
pub type LinearForm = BTreeMap<String, Rational>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WeightError {
    #[error("{0:?} is not a free block")]
    NotAFreeBlock(Vec<String>),
    #[error("equation {0} is not homogeneous for the given weights")]
    NotHomogeneous(String),
    #[error("no weight for {0}")]
    MissingWeight(String),
    #[error("bad weight table: {0}")]
    BadTable(String),
    #[error(transparent)]
    Arith(#[from] exact_arith::ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightAssignment {
    pub weights: BTreeMap<String, Rational>,
}

impl WeightAssignment {
    pub fn from_pairs<W: Into<Rational> + Copy>(pairs: &[(&str, W)]) -> Self {
        WeightAssignment { weights: pairs.iter().map(|(n, w)| (n.to_string(), (*w).into())).collect() }
    }

    pub fn get(&self, var: &str) -> Result<&Rational, WeightError> {
        self.weights.get(var).ok_or_else(|| WeightError::MissingWeight(var.to_string()))
    }

    /// Weighted degree of a monomial of `ring`.
    pub fn monomial_weight(&self, ring: &Ring, m: &Monomial) -> Result<Rational, WeightError> {
        let mut w = Rational::zero();
        for (i, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                w += &(self.get(&ring.names()[i])? * &Rational::from(e as i64));
            }
        }
        Ok(w)
    }

    /// Weighted degree of `f`, or `None` if `f` is zero or not homogeneous.
    pub fn degree_of(&self, f: &Polynomial) -> Result<Option<Rational>, WeightError> {
        let mut out: Option<Rational> = None;
        for (m, _) in f.terms() {
            let w = self.monomial_weight(f.ring(), m)?;
            match &out {
                Some(d) if *d != w => return Ok(None),
                _ => out = Some(w),
            }
        }
        Ok(out)
    }

    /// Total over the listed variables.
    pub fn sum(&self, vars: &[String]) -> Result<Rational, WeightError> {
        let mut s = Rational::zero();
        for v in vars {
            s += self.get(v)?;
        }
        Ok(s)
    }

    pub fn is_positive_integral(&self) -> bool {
        self.weights.values().all(|w| w.is_integer() && *w > 0)
    }

    /// Reads `{"var": 1, "other": "1/2", ...}`.
    pub fn from_json(v: &Value) -> Result<Self, WeightError> {
        let obj = v.as_object().ok_or_else(|| WeightError::BadTable("expected an object".into()))?;
        let mut weights = BTreeMap::new();
        for (k, val) in obj {
            let w = match val {
                Value::Number(n) => n
                    .as_i64()
                    .map(Rational::from)
                    .ok_or_else(|| WeightError::BadTable(format!("{k}: not an integer")))?,
                Value::String(s) => s.parse::<Rational>().map_err(|_| WeightError::BadTable(format!("{k}: {s}")))?,
                _ => return Err(WeightError::BadTable(format!("{k}: unsupported value"))),
            };
            weights.insert(k.clone(), w);
        }
        Ok(WeightAssignment { weights })
    }

    pub fn to_json(&self) -> Value {
        json!(self.weights.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect::<serde_json::Map<_, _>>())
    }
}

/// Text of a linear form, variables in map order.
pub fn form_text(f: &LinearForm) -> String {
    let mut out = String::new();
    for (v, c) in f.iter().filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !a.is_one() {
            out.push_str(&format!("{a}*"));
        }
        out.push_str(v);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Parses a linear form such as `"x1 + y3 - 2*y1"` over the given variables.
pub fn parse_form(vars: &[String], text: &str) -> Result<LinearForm, WeightError> {
    let names: Vec<&str> = vars.iter().map(|s| s.as_str()).collect();
    let r = Ring::of(&names);
    let p = Polynomial::parse(&r, text)?;
    let mut out = LinearForm::new();
    for (m, c) in p.terms() {
        let idx: Vec<usize> = m.exps().iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect();
        match (idx.as_slice(), m.degree()) {
            ([i], 1) => {
                out.insert(vars[*i].clone(), c.clone());
            }
            _ => return Err(WeightError::BadTable(format!("{text} is not linear"))),
        }
    }
    Ok(out)
}
