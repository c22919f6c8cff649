use fts_core::{CheckRecord, EquationSystem, Report};
use poly_linalg::DegreeBound;
use rayon::prelude::*;
use serde_json::json;

use crate::dictionary::CoordinateDictionary;
use crate::equivalence::{grading_without, verify_presentation_equivalence, Equivalence};
use crate::generate::*;
use crate::s8::b6_cone_check;
use crate::VarietyError;

/// Names of the dictionary equivalences, with the ids on each side.
pub const EQUIVALENCES: [(&str, VarietyId, VarietyId); 7] = [
    ("equiv.CL10_vs_CL10_alt", VarietyId::CL10, VarietyId::CL10Alt),
    ("equiv.S8_raw_vs_S8", VarietyId::S8Raw, VarietyId::S8),
    ("equiv.CL9_A4_vs_U14", VarietyId::CL9A4, VarietyId::U14),
    ("equiv.CL8_A3A4_vs_S8_raw", VarietyId::CL8A3A4, VarietyId::S8Raw),
    ("equiv.CL8_A1A4_vs_T8", VarietyId::CL8A1A4T8, VarietyId::CL8A1A4T8),
    ("equiv.CL8_A1A4_vs_U14", VarietyId::CL8A1A4T8, VarietyId::U14),
    ("equiv.CL8_A1A3_vs_Z12", VarietyId::CL8A1A3, VarietyId::Z12),
];

/// The cluster system with `A1 = A4 = −1`, in the F22 template.
pub fn cl8_a1a4_cluster() -> Result<EquationSystem, VarietyError> {
    cl10_dictionary().then(&cl_specialization(&["A1", "A4"]))?.apply_system(f22_template(), "CL8_A1A4")
}

/// Runs one named equivalence; `corrupt` is applied to the b-side before the
/// dictionary.
pub fn dictionary_equivalence_with(
    name: &str,
    corrupt: impl Fn(EquationSystem) -> EquationSystem,
) -> Result<Equivalence, VarietyError> {
    let total = DegreeBound::total;
    let (a, b, dict, bound) = match name {
        "equiv.CL10_vs_CL10_alt" => {
            let r = cl10_ring();
            let g = grading_without(&r, &["A1", "A2", "A3", "A4", "l13", "l24"]);
            (
                generate(VarietyId::CL10)?,
                generate(VarietyId::CL10Alt)?,
                CoordinateDictionary::identity(&r),
                DegreeBound::graded(3, g, 6),
            )
        }
        "equiv.S8_raw_vs_S8" => (generate(VarietyId::S8Raw)?, generate(VarietyId::S8)?, s8_renaming(), total(4)),
        "equiv.CL9_A4_vs_U14" => (generate(VarietyId::CL9A4)?, generate(VarietyId::U14)?, cl9_dictionary(false), total(5)),
        "equiv.CL8_A3A4_vs_S8_raw" => {
            (generate(VarietyId::CL8A3A4)?, generate(VarietyId::S8Raw)?, cl8_a3a4_dictionary(), total(4))
        }
        "equiv.CL8_A1A4_vs_T8" => (cl8_a1a4_cluster()?, generate(VarietyId::CL8A1A4T8)?, t8_dictionary(), total(4)),
        "equiv.CL8_A1A4_vs_U14" => (cl8_a1a4_cluster()?, generate(VarietyId::U14)?, cl9_dictionary(true), total(5)),
        "equiv.CL8_A1A3_vs_Z12" => {
            (generate(VarietyId::CL8A1A3)?, generate(VarietyId::Z12)?, cl8_a1a3_dictionary(), total(4))
        }
        other => return Err(VarietyError::UnknownId(other.to_string())),
    };
    verify_presentation_equivalence(name, &a, &corrupt(b), &dict, &bound)
}

pub fn dictionary_equivalence(name: &str) -> Result<Equivalence, VarietyError> {
    dictionary_equivalence_with(name, |b| b)
}

/// Every dictionary equivalence, plus the B6 rewrite. A B6 error becomes a
/// failing record.
pub fn equivalence_suite() -> Result<Report, VarietyError> {
    let records: Vec<CheckRecord> = EQUIVALENCES
        .par_iter()
        .map(|(name, _, _)| dictionary_equivalence(name).map(|e| e.to_record()))
        .collect::<Result<_, _>>()?;
    let mut report = Report(records);
    report.extend(b6_report(true));
    Ok(report)
}

/// `b6_cone_check` as a report, with `ResidualDependence` turned into a failing record.
pub fn b6_report(cubic_term: bool) -> Report {
    match b6_cone_check(cubic_term) {
        Ok(r) => r,
        Err(e) => Report(vec![CheckRecord::from_residual("b6.d2_free", 1).with_details(json!({ "error": e.to_string() }))]),
    }
}

/// Generation summary for one id and the equivalences it takes part in.
pub fn variety_report(id: VarietyId) -> Result<Report, VarietyError> {
    let mut report = Report::default();
    if id == VarietyId::P23Transform {
        let ls = crate::papadakis::papadakis_transform()?;
        report.push(
            CheckRecord::from_residual(format!("variety.{id}.generated"), 0)
                .with_details(json!({ "r_ranges": ls.r_ranges() })),
        );
        return Ok(report);
    }
    let sys = generate(id)?;
    let degrees: Vec<u32> = sys.polynomials().iter().filter_map(|p| p.total_degree()).collect();
    report.push(
        CheckRecord::from_residual(format!("variety.{id}.generated"), 0)
            .with_details(json!({ "equations": sys.len(), "degrees": degrees })),
    );
    let names: Vec<&str> =
        EQUIVALENCES.iter().filter(|(_, a, b)| *a == id || *b == id).map(|(n, _, _)| *n).collect();
    let records: Vec<CheckRecord> = names
        .par_iter()
        .map(|n| dictionary_equivalence(n).map(|e| e.to_record()))
        .collect::<Result<_, _>>()?;
    report.extend(Report(records));
    if id == VarietyId::B6 || id == VarietyId::S8 {
        report.extend(b6_report(true));
    }
    Ok(report)
}
