use exact_arith::Polynomial;
use fts_core::{build_fts, parse_pair, FtsError, FtsSystem};
use poly_linalg::PolyMatrix;
use serde_json::Value;

use crate::CliError;

fn entry_text(v: &Value) -> Result<String, CliError> {
    match v {
        Value::Number(n) if n.is_i64() => Ok(n.to_string()),
        Value::String(s) if !s.trim().is_empty() => Ok(s.trim().to_string()),
        other => Err(CliError::Input(format!("bad matrix entry {other}"))),
    }
}

fn matrix(v: &Value, key: &str) -> Result<[[String; 3]; 3], CliError> {
    let rows = v.get(key).and_then(|m| m.as_array()).ok_or_else(|| CliError::Input(format!("missing {key}")))?;
    if rows.len() != 3 {
        return Err(CliError::Input(format!("{key} must have 3 rows")));
    }
    let mut out: [[String; 3]; 3] = Default::default();
    for (i, row) in rows.iter().enumerate() {
        let row = row.as_array().filter(|r| r.len() == 3).ok_or_else(|| CliError::Input(format!("{key} row {i}")))?;
        for (j, e) in row.iter().enumerate() {
            out[i][j] = entry_text(e)?;
        }
    }
    Ok(out)
}

fn refs(m: &[[String; 3]; 3]) -> [[&str; 3]; 3] {
    std::array::from_fn(|i| std::array::from_fn(|j| m[i][j].as_str()))
}

/// A parsed input file. `nx_perturbation` is an optional polynomial in
/// `x1, x2, x3` added to `N_x` after construction (a negative control).
#[derive(Clone, Debug)]
pub struct PqInput {
    pub p: PolyMatrix,
    pub q: PolyMatrix,
    pub nx_perturbation: Option<String>,
}

impl PqInput {
    pub fn build(&self) -> Result<FtsSystem, FtsError> {
        let sys = build_fts(&self.p, &self.q)?;
        match &self.nx_perturbation {
            None => Ok(sys),
            Some(text) => {
                let extra = Polynomial::parse(sys.forms_ring(), text)?;
                sys.with_modified_nx(&extra)
            }
        }
    }
}

/// Reads `{"P": 3×3, "Q": 3×3}` with integer, `"a/b"` or symbolic entries,
/// plus an optional `"Nx_perturbation"` string.
pub fn parse_pq(text: &str) -> Result<PqInput, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    let p = matrix(&v, "P")?;
    let q = matrix(&v, "Q")?;
    let (p, q) = parse_pair(&refs(&p), &refs(&q)).map_err(|e| CliError::Input(e.to_string()))?;
    let nx_perturbation = match v.get("Nx_perturbation") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(other) => return Err(CliError::Input(format!("bad Nx_perturbation {other}"))),
    };
    Ok(PqInput { p, q, nx_perturbation })
}

/// Canonical text summary of a built system.
pub fn summary(sys: &FtsSystem) -> String {
    let b = sys.beta_matrix();
    let rows: Vec<String> = (0..3)
        .map(|i| format!("[{}]", (0..3).map(|j| b.get(i, j).to_text()).collect::<Vec<_>>().join(", ")))
        .collect();
    format!(
        "Nx: {}\nNy: {}\nBetaMatrix: [{}]\nDbeta: {}\n",
        sys.nx().to_text(),
        sys.ny().to_text(),
        rows.join(", "),
        sys.dbeta().to_text()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_entries() {
        let pq = parse_pq(r#"{"P": [[1, "1/2", "a"], [0, 1, 0], [0, 0, 1]], "Q": [[0,0,0],[0,0,0],[0,0,"b"]]}"#).unwrap();
        assert_eq!(pq.p.get(0, 1).to_text(), "1/2");
        assert_eq!(pq.q.get(2, 2).to_text(), "b");
        assert!(pq.nx_perturbation.is_none());
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(parse_pq(r#"{"P": [[1]], "Q": []}"#).is_err());
        assert!(parse_pq("not json").is_err());
        assert!(parse_pq(r#"{"P": [[1,0,0],[0,1,0],[0,0,true]], "Q": [[0,0,0],[0,0,0],[0,0,0]]}"#).is_err());
    }
}
