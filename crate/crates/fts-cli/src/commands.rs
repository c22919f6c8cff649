use std::str::FromStr;

use serde_json::{json, Value};
use varieties::{generate, papadakis_transform, VarietyId};
use weights::tables::{CL10_FREE_BLOCK, U14_FREE_BLOCK};
use weights::{graded_report, solve_weights, weight_constraints, WeightAssignment};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(CliError::Input(format!("unknown format {other}"))),
        }
    }
}

pub fn parse_variety(id: &str) -> Result<VarietyId, CliError> {
    id.parse().map_err(|_| CliError::Input(format!("unknown variety id {id}")))
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Canonical equations of a variety.
pub fn emit(id: VarietyId, format: Format) -> Result<String, CliError> {
    if id == VarietyId::P23Transform {
        let ls = papadakis_transform().map_err(|e| CliError::Other(e.to_string()))?;
        return Ok(match format {
            Format::Text => ls.to_text(),
            Format::Json => pretty(&ls.to_json()),
        });
    }
    let sys = generate(id).map_err(|e| CliError::Other(e.to_string()))?;
    Ok(match format {
        Format::Text => sys.to_text(),
        Format::Json => pretty(&sys.to_json()),
    })
}

fn free_block(id: VarietyId) -> Option<&'static [&'static str]> {
    match id {
        VarietyId::U14 => Some(&U14_FREE_BLOCK),
        VarietyId::CL10 => Some(&CL10_FREE_BLOCK),
        _ => None,
    }
}

/// Weight constraints and their solution space; with a table, also the
/// degree of every equation under it (and the graded report for U14).
pub fn weights(id: VarietyId, table: Option<&str>) -> Result<String, CliError> {
    if id == VarietyId::P23Transform {
        return Err(CliError::Input("P23_transform is a Laurent system".into()));
    }
    let other = |e: &dyn ToString| CliError::Other(e.to_string());
    let sys = generate(id).map_err(|e| other(&e))?;
    let wcs = weight_constraints(&sys);
    let sol = solve_weights(&wcs, free_block(id)).map_err(|e| other(&e))?;
    let mut out = json!({
        "variety": id.as_str(),
        "constraints": wcs.constraints.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        "solution": sol.to_json(),
    });
    if let Some(text) = table {
        let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
        let w = WeightAssignment::from_json(&v).map_err(|e| CliError::Input(e.to_string()))?;
        let satisfied = wcs.satisfied_by(&w).map_err(|e| CliError::Input(e.to_string()))?;
        let mut degrees = serde_json::Map::new();
        for (label, f) in sys.equations() {
            let d = w.degree_of(f).map_err(|e| CliError::Input(e.to_string()))?;
            degrees.insert(label.clone(), d.map(|d| json!(d.to_string())).unwrap_or(Value::Null));
        }
        out["table"] = json!({ "homogeneous": satisfied, "equation_degrees": degrees });
        if id == VarietyId::U14 && satisfied {
            out["graded"] = graded_report(&sys, &w).map_err(|e| other(&e))?.to_json();
        }
    }
    Ok(pretty(&out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn emits_f22() {
        let text = emit(VarietyId::F22, Format::Text).unwrap();
        assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 9);
        assert!(parse_variety("nope").is_err());
    }

    #[test]
    fn u14_weights_have_six_dimensions() {
        let out: Value = serde_json::from_str(&weights(VarietyId::U14, None).unwrap()).unwrap();
        assert_eq!(out["solution"]["dimension"], 6);
    }
}
