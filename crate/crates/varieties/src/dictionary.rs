use std::collections::BTreeMap;

use exact_arith::{Polynomial, Rational, Ring};
use fts_core::EquationSystem;

use crate::VarietyError;

/// A ring homomorphism given by images of the variables of `target`, written as
/// polynomials over `source`. Applying it rewrites a system over `target` into
/// one over `source`.
#[derive(Clone, Debug)]
pub struct CoordinateDictionary {
    pub name: String,
    pub source_ring: Ring,
    pub target_ring: Ring,
    pub assignment: BTreeMap<String, Polynomial>,
    pub constants: BTreeMap<String, Rational>,
}

impl CoordinateDictionary {
    /// `entries` pairs a target variable with the text of its image. Target
    /// variables not listed map to the source variable of the same name.
    pub fn new(name: &str, source: &Ring, target: &Ring, entries: &[(String, String)]) -> Result<Self, VarietyError> {
        let mut assignment = BTreeMap::new();
        let mut constants = BTreeMap::new();
        for (v, text) in entries {
            if !target.contains(v) {
                return Err(VarietyError::Dictionary(format!("{name}: {v} is not a target variable")));
            }
            if assignment.contains_key(v) || constants.contains_key(v) {
                return Err(VarietyError::Dictionary(format!("{name}: {v} assigned twice")));
            }
            let p = Polynomial::parse(source, text)?;
            match p.constant_value() {
                Some(c) => {
                    constants.insert(v.clone(), c);
                }
                None => {
                    assignment.insert(v.clone(), p);
                }
            }
        }
        for v in target.names() {
            if assignment.contains_key(v) || constants.contains_key(v) {
                continue;
            }
            if !source.contains(v) {
                return Err(VarietyError::Dictionary(format!("{name}: {v} has no image")));
            }
            assignment.insert(v.clone(), Polynomial::v(source, v));
        }
        Ok(CoordinateDictionary {
            name: name.to_string(),
            source_ring: source.clone(),
            target_ring: target.clone(),
            assignment,
            constants,
        })
    }

    /// The identity on a ring.
    pub fn identity(ring: &Ring) -> Self {
        Self::new("identity", ring, ring, &[]).expect("identity is total")
    }

    /// Images in the order of the target ring's variables.
    pub fn images(&self) -> Vec<Polynomial> {
        self.target_ring
            .names()
            .iter()
            .map(|v| match self.assignment.get(v) {
                Some(p) => p.clone(),
                None => Polynomial::constant(&self.source_ring, self.constants[v].clone()),
            })
            .collect()
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial, VarietyError> {
        if !f.ring().same(&self.target_ring) {
            return Err(VarietyError::Dictionary(format!("{}: polynomial not over the target ring", self.name)));
        }
        Ok(f.substitute(&self.source_ring, &self.images()))
    }

    pub fn apply_system(&self, sys: &EquationSystem, name: &str) -> Result<EquationSystem, VarietyError> {
        let images = self.images();
        if !sys.ring().same(&self.target_ring) {
            return Err(VarietyError::Dictionary(format!("{}: system {} not over the target ring", self.name, sys.name)));
        }
        Ok(sys.map(name, &self.source_ring, |p| p.substitute(&self.source_ring, &images))?)
    }

    /// `self ∘ inner`: first `self`, then `inner` applied to the images.
    pub fn then(&self, inner: &CoordinateDictionary) -> Result<CoordinateDictionary, VarietyError> {
        if !inner.target_ring.same(&self.source_ring) {
            return Err(VarietyError::Dictionary(format!("cannot compose {} with {}", self.name, inner.name)));
        }
        let entries: Vec<(String, String)> = self
            .target_ring
            .names()
            .iter()
            .zip(self.images())
            .map(|(v, p)| Ok((v.clone(), inner.apply(&p)?.to_text())))
            .collect::<Result<_, VarietyError>>()?;
        Self::new(&format!("{}+{}", self.name, inner.name), &inner.source_ring, &self.target_ring, &entries)
    }
}

/// Entry texts `prefix11 … prefix33` for a 3×3 block.
pub(crate) fn matrix_entries(prefix: &str, rows: [[&str; 3]; 3]) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            out.push((format!("{prefix}{}{}", i + 1, j + 1), e.to_string()));
        }
    }
    out
}

pub(crate) fn vector_entries(prefix: &str, v: [&str; 3]) -> Vec<(String, String)> {
    v.iter().enumerate().map(|(i, e)| (format!("{prefix}{}", i + 1), e.to_string())).collect()
}

pub(crate) fn pairs(v: &[(&str, &str)]) -> Vec<(String, String)> {
    v.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_identity() {
        let a = Ring::of(&["u", "v"]);
        let b = Ring::of(&["x", "y"]);
        let c = Ring::of(&["p"]);
        let d1 = CoordinateDictionary::new("d1", &a, &b, &pairs(&[("x", "u+v"), ("y", "3")])).unwrap();
        assert_eq!(d1.constants["y"], Rational::from(3));
        let d2 = CoordinateDictionary::new("d2", &c, &a, &pairs(&[("u", "p^2"), ("v", "-p")])).unwrap();
        let both = d1.then(&d2).unwrap();
        let f = Polynomial::parse(&b, "x*y").unwrap();
        assert_eq!(both.apply(&f).unwrap(), Polynomial::parse(&c, "3*p^2 - 3*p").unwrap());
        let id = CoordinateDictionary::identity(&a);
        let g = Polynomial::parse(&a, "u*v - 1").unwrap();
        assert_eq!(id.apply(&g).unwrap(), g);
        assert!(CoordinateDictionary::new("bad", &c, &b, &pairs(&[("x", "p")])).is_err());
        assert!(CoordinateDictionary::new("dup", &c, &b, &pairs(&[("x", "p"), ("x", "1"), ("y", "0")])).is_err());
    }
}
