use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use exact_arith::Rational;
use fts_core::EquationSystem;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use poly_linalg::rref;
use serde_json::{json, Value};

use crate::{form_text, LinearForm, WeightAssignment, WeightError};

/// `Σ c_v·w(v) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearRelation {
    pub coeffs: BTreeMap<String, Rational>,
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let named: LinearForm = self.coeffs.iter().map(|(v, c)| (format!("w({v})"), c.clone())).collect();
        write!(f, "{} = 0", form_text(&named))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightConstraintSystem {
    pub unknowns: Vec<String>,
    pub constraints: Vec<LinearRelation>,
}

impl WeightConstraintSystem {
    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.constraints
            .iter()
            .map(|r| self.unknowns.iter().map(|v| r.coeffs.get(v).cloned().unwrap_or_default()).collect())
            .collect()
    }

    /// Whether `w` satisfies every constraint.
    pub fn satisfied_by(&self, w: &WeightAssignment) -> Result<bool, WeightError> {
        for r in &self.constraints {
            let mut s = Rational::zero();
            for (v, c) in &r.coeffs {
                s += &(c * w.get(v)?);
            }
            if !s.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn normalize(v: Vec<BigInt>) -> Option<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    let first_neg = v.iter().find(|x| !x.is_zero()).map(|x| x.is_negative()).unwrap_or(false);
    let g = if first_neg { -g } else { g };
    Some(v.into_iter().map(|x| x / &g).collect())
}

/// One relation per monomial of each equation against that equation's first
/// monomial, normalized to primitive integer form; duplicates removed.
pub fn weight_constraints(sys: &EquationSystem) -> WeightConstraintSystem {
    let unknowns: Vec<String> = sys.ring().names().to_vec();
    let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let mut constraints = Vec::new();
    for (_, f) in sys.equations() {
        let terms = f.terms();
        let Some((m0, _)) = terms.first() else { continue };
        for (m, _) in &terms[1..] {
            let diff: Vec<BigInt> =
                m.exps().iter().zip(m0.exps()).map(|(&a, &b)| BigInt::from(a as i64 - b as i64)).collect();
            if let Some(v) = normalize(diff) {
                if seen.insert(v.clone()) {
                    let coeffs = v
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (unknowns[i].clone(), Rational::from(c.clone())))
                        .collect();
                    constraints.push(LinearRelation { coeffs });
                }
            }
        }
    }
    WeightConstraintSystem { unknowns, constraints }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WeightSolution {
    pub dimension: usize,
    pub basis: Vec<LinearForm>,
    pub free_block: Option<Vec<String>>,
    /// every unknown as a linear form in the free block
    pub parametrization: Option<BTreeMap<String, LinearForm>>,
}

impl WeightSolution {
    /// Weights obtained by giving the free block the listed values.
    pub fn evaluate(&self, free: &[(&str, Rational)]) -> Result<WeightAssignment, WeightError> {
        let param = self.parametrization.as_ref().ok_or_else(|| WeightError::NotAFreeBlock(vec![]))?;
        let vals: BTreeMap<&str, &Rational> = free.iter().map(|(n, v)| (*n, v)).collect();
        let mut weights = BTreeMap::new();
        for (v, form) in param {
            let mut s = Rational::zero();
            for (f, c) in form {
                let x = vals.get(f.as_str()).ok_or_else(|| WeightError::MissingWeight(f.clone()))?;
                s += &(c * *x);
            }
            weights.insert(v.clone(), s);
        }
        Ok(WeightAssignment { weights })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dimension": self.dimension,
            "basis": self.basis.iter().map(form_text).collect::<Vec<_>>(),
            "free_block": self.free_block,
            "parametrization": self.parametrization.as_ref().map(|p| {
                p.iter().map(|(k, f)| (k.clone(), json!(form_text(f)))).collect::<serde_json::Map<_, _>>()
            }),
        })
    }
}

/// Exact solution space of the constraints. With `block`, also expresses every
/// unknown in the block, failing with `NotAFreeBlock` when the block does not
/// parametrize the solutions.
pub fn solve_weights(wcs: &WeightConstraintSystem, block: Option<&[&str]>) -> Result<WeightSolution, WeightError> {
    let n = wcs.unknowns.len();
    let rows = wcs.rows();
    let (r, pivots) = rref(&rows);
    let dimension = n - pivots.len();
    let basis: Vec<LinearForm> = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = LinearForm::new();
            v.insert(wcs.unknowns[f].clone(), Rational::one());
            for (i, &p) in pivots.iter().enumerate() {
                if !r[i][f].is_zero() {
                    v.insert(wcs.unknowns[p].clone(), -&r[i][f]);
                }
            }
            v
        })
        .collect();
    let Some(block) = block else {
        return Ok(WeightSolution { dimension, basis, free_block: None, parametrization: None });
    };
    let not_free = || WeightError::NotAFreeBlock(block.iter().map(|s| s.to_string()).collect());
    if block.iter().any(|b| !wcs.unknowns.iter().any(|u| u == b)) || block.len() != dimension {
        return Err(not_free());
    }
    // bound unknowns first, so they are the pivots exactly when the block is free
    let order: Vec<usize> = (0..n)
        .filter(|&i| !block.contains(&wcs.unknowns[i].as_str()))
        .chain(block.iter().map(|b| wcs.unknowns.iter().position(|u| u == b).unwrap()))
        .collect();
    let permuted: Vec<Vec<Rational>> = rows.iter().map(|row| order.iter().map(|&i| row[i].clone()).collect()).collect();
    let (r, pivots) = rref(&permuted);
    let bound = n - block.len();
    if pivots != (0..bound).collect::<Vec<_>>() {
        return Err(not_free());
    }
    let mut param = BTreeMap::new();
    for (i, &p) in pivots.iter().enumerate() {
        let mut form = LinearForm::new();
        for (k, b) in block.iter().enumerate() {
            let c = &r[i][bound + k];
            if !c.is_zero() {
                form.insert(b.to_string(), -c);
            }
        }
        param.insert(wcs.unknowns[order[p]].clone(), form);
    }
    for b in block {
        param.insert(b.to_string(), LinearForm::from([(b.to_string(), Rational::one())]));
    }
    Ok(WeightSolution {
        dimension,
        basis,
        free_block: Some(block.iter().map(|s| s.to_string()).collect()),
        parametrization: Some(param),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::{Polynomial, Ring};

    fn sys(r: &Ring, eqs: &[&str]) -> EquationSystem {
        let polys = eqs.iter().map(|e| Polynomial::parse(r, e).unwrap()).collect();
        EquationSystem::unlabelled("t", r, polys).unwrap()
    }

    #[test]
    fn single_quadric() {
        let r = Ring::of(&["x", "y", "z"]);
        let wcs = weight_constraints(&sys(&r, &["x^2 - y*z"]));
        assert_eq!(wcs.constraints.len(), 1);
        let want: BTreeMap<String, Rational> =
            [("x", 2), ("y", -1), ("z", -1)].iter().map(|(v, c)| (v.to_string(), Rational::from(*c))).collect();
        assert_eq!(wcs.constraints[0].coeffs, want);
        assert_eq!(wcs.constraints[0].to_string(), "2*w(x) - w(y) - w(z) = 0");
    }

    #[test]
    fn linear_equation() {
        let r = Ring::of(&["x", "y", "z", "u"]);
        let wcs = weight_constraints(&sys(&r, &["x - y"]));
        let sol = solve_weights(&wcs, Some(&["y", "z", "u"])).unwrap();
        assert_eq!(sol.dimension, 3);
        assert_eq!(sol.parametrization.unwrap()["x"], LinearForm::from([("y".to_string(), Rational::one())]));
        assert!(matches!(solve_weights(&wcs, Some(&["x", "y", "z"])), Err(WeightError::NotAFreeBlock(_))));
    }
}
