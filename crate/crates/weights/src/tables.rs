//! Reference weight relations and tables, for comparison with the computed ones.

use std::collections::BTreeMap;

use exact_arith::Rational;

use crate::{parse_form, LinearForm, WeightAssignment, WeightError};

pub const U14_FREE_BLOCK: [&str; 6] = ["x1", "x2", "x3", "y1", "y2", "y3"];
pub const CL10_FREE_BLOCK: [&str; 6] = ["th1", "th2", "th3", "th4", "th23", "th41"];

pub const U14_RELATIONS: [(&str, &str); 12] = [
    ("a11", "-y1 + y3"),
    ("a12", "x1 + y3 - x2 - y1"),
    ("a21", "x2 + y3 - x1 - y1"),
    ("b11", "-y2 + y3"),
    ("b12", "x1 + y3 - x2 - y2"),
    ("b21", "x2 + y3 - x1 - y2"),
    ("c11", "x1 + y3 - x3 - y1"),
    ("c12", "x1 + y3 - x3 - y2"),
    ("c21", "x2 + y3 - x3 - y1"),
    ("c22", "x2 + y3 - x3 - y2"),
    ("s", "-x3 + 2*y3"),
    ("t", "x1 + x2 + y3 - y1 - y2"),
];

pub const CL10_RELATIONS: [(&str, &str); 8] = [
    ("A1", "-2*th1 + th2 + th41"),
    ("A2", "th1 - 2*th2 + th23"),
    ("A3", "-2*th3 + th4 + th23"),
    ("A4", "th3 - 2*th4 + th41"),
    ("A23", "th2 + th3 - th23"),
    ("A41", "th1 + th4 - th41"),
    ("l13", "-th1 - th3 + th23 + th41"),
    ("l24", "-th2 - th4 + th23 + th41"),
];

/// Printed relations as linear forms, the free block mapped to itself.
pub fn relations(block: &[&str], printed: &[(&str, &str)]) -> Result<BTreeMap<String, LinearForm>, WeightError> {
    let vars: Vec<String> = block.iter().map(|s| s.to_string()).collect();
    let mut out = BTreeMap::new();
    for (v, f) in printed {
        out.insert(v.to_string(), parse_form(&vars, f)?);
    }
    for b in block {
        out.insert(b.to_string(), LinearForm::from([(b.to_string(), Rational::one())]));
    }
    Ok(out)
}

/// `w(A) = w(B) = w(C) = 1`, `w(x) = (1, 1, 1)`, `w(y) = (1, 1, 2)`, `w(s) = 3`, `w(t) = 2`.
pub fn u14_example() -> WeightAssignment {
    let mut pairs: Vec<(&str, i64)> = U14_RELATIONS[..10].iter().map(|(v, _)| (*v, 1)).collect();
    pairs.extend([("x1", 1), ("x2", 1), ("x3", 1), ("y1", 1), ("y2", 1), ("y3", 2), ("s", 3), ("t", 2)]);
    WeightAssignment::from_pairs(&pairs)
}

/// `w(u) = 1`, `w(v) = 2`, `w(d) = 1` on the S8 coordinates.
pub fn s8_example() -> WeightAssignment {
    let mut pairs = Vec::new();
    for i in 1..=4 {
        pairs.push((format!("u{i}"), 1));
    }
    for j in 0..4 {
        pairs.push((format!("v{j}"), 2));
        pairs.push((format!("d{j}"), 1));
    }
    let refs: Vec<(&str, i64)> = pairs.iter().map(|(n, w)| (n.as_str(), *w)).collect();
    WeightAssignment::from_pairs(&refs)
}

/// Cluster weights from the reference relations at the given θ-weights.
pub fn cl10_from_thetas(th: [i64; 6]) -> Result<WeightAssignment, WeightError> {
    let rel = relations(&CL10_FREE_BLOCK, &CL10_RELATIONS)?;
    let vals: BTreeMap<&str, Rational> = CL10_FREE_BLOCK.iter().zip(th).map(|(n, w)| (*n, Rational::from(w))).collect();
    let mut weights = BTreeMap::new();
    for (v, form) in rel {
        let mut s = Rational::zero();
        for (f, c) in &form {
            s += &(c * &vals[f.as_str()]);
        }
        weights.insert(v, s);
    }
    Ok(WeightAssignment { weights })
}
