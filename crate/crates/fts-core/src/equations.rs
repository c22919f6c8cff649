use exact_arith::{Polynomial, Ring};
use serde_json::{json, Value};

use crate::FtsError;

/// A named, ordered list of labelled polynomials over one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct EquationSystem {
    pub name: String,
    ring: Ring,
    equations: Vec<(String, Polynomial)>,
}

impl EquationSystem {
    pub fn new(name: &str, ring: &Ring, equations: Vec<(String, Polynomial)>) -> Result<Self, FtsError> {
        for (i, (l, p)) in equations.iter().enumerate() {
            if !p.ring().same(ring) {
                return Err(FtsError::RingMismatch);
            }
            if equations[..i].iter().any(|(m, _)| m == l) {
                return Err(FtsError::IdentityViolation { label: l.clone(), residual: "duplicate label".into() });
            }
        }
        Ok(EquationSystem { name: name.to_string(), ring: ring.clone(), equations })
    }

    /// Labels `e1, e2, …`.
    pub fn unlabelled(name: &str, ring: &Ring, polys: Vec<Polynomial>) -> Result<Self, FtsError> {
        let eqs = polys.into_iter().enumerate().map(|(i, p)| (format!("e{}", i + 1), p)).collect();
        Self::new(name, ring, eqs)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn equations(&self) -> &[(String, Polynomial)] {
        &self.equations
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.equations.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn get(&self, label: &str) -> Option<&Polynomial> {
        self.equations.iter().find(|(l, _)| l == label).map(|(_, p)| p)
    }

    pub fn map(&self, name: &str, ring: &Ring, f: impl Fn(&Polynomial) -> Polynomial) -> Result<Self, FtsError> {
        Self::new(name, ring, self.equations.iter().map(|(l, p)| (l.clone(), f(p))).collect())
    }

    /// Drops equations that became zero.
    pub fn without_zeros(&self) -> Self {
        EquationSystem {
            name: self.name.clone(),
            ring: self.ring.clone(),
            equations: self.equations.iter().filter(|(_, p)| !p.is_zero()).cloned().collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n# variables: {}\n", self.name, self.ring.names().join(", "));
        for (l, p) in &self.equations {
            out.push_str(&format!("{l}: {p}\n"));
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "variables": self.ring.names(),
            "equations": self.equations.iter().map(|(l, p)| json!({"label": l, "text": p.to_text()})).collect::<Vec<_>>(),
        })
    }
}
