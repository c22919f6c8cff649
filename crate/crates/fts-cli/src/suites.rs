use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use exact_arith::{qf, Rational};
use fts_core::{
    axiom_check, build_fts, delta_span, diagonal_pair, identity_suite, parametric_pair, peirce_spectrum, random_pairs,
    streg_consistency, AxiomMode, CheckRecord, FtsSystem, Report, Status,
};
use poly_linalg::PolyMatrix;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use varieties::{
    base_locus_check_u14, chart_check, equivalence_suite, generate, group_action_check, rank_record,
    s8_fiber_check, s_chart_points, singular_x_points, singular_y_points, tangential_scroll_check, variety_report,
    z12_beta_adjoint_check, Action, Chart, QShape, VarietyId,
};
use weights::tables::{
    relations, s8_example, u14_example, CL10_FREE_BLOCK, CL10_RELATIONS, U14_FREE_BLOCK, U14_RELATIONS,
};
use weights::{graded_report, solve_weights, symbolic_duality, weight_constraints};

use crate::pq::PqInput;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Axioms,
    Identities,
    Variety(VarietyId),
    Charts,
    Actions,
    Fibers,
    Weights,
    Equivalences,
    All,
}

impl FromStr for Suite {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(id) = s.strip_prefix("variety:") {
            return id.parse().map(Suite::Variety).map_err(|_| CliError::Input(format!("unknown variety id {id}")));
        }
        Ok(match s {
            "axioms" => Suite::Axioms,
            "identities" => Suite::Identities,
            "charts" => Suite::Charts,
            "actions" => Suite::Actions,
            "fibers" => Suite::Fibers,
            "weights" => Suite::Weights,
            "equivalences" => Suite::Equivalences,
            "all" => Suite::All,
            other => return Err(CliError::Input(format!("unknown suite {other}"))),
        })
    }
}

/// One line of the JSON Lines report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub status: Status,
    pub residual_terms: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub duration_ms: u64,
}

#[derive(Clone, Debug)]
pub struct Options {
    pub seed: u64,
    pub bound: Option<u32>,
    pub pq: Option<PqInput>,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 42, bound: None, pq: None, timings: false }
    }
}

type Unit<'a> = (String, Box<dyn Fn() -> Result<Report, String> + Send + Sync + 'a>);

fn unit<'a, E: ToString>(name: impl Into<String>, f: impl Fn() -> Result<Report, E> + Send + Sync + 'a) -> Unit<'a> {
    (name.into(), Box::new(move || f().map_err(|e| e.to_string())))
}

fn prefixed(prefix: &str, rep: Report) -> Report {
    Report(
        rep.0
            .into_iter()
            .map(|mut r| {
                r.check = format!("{prefix}.{}", r.check);
                r
            })
            .collect(),
    )
}

type Built = Result<Arc<FtsSystem>, String>;

fn build(p: &PolyMatrix, q: &PolyMatrix) -> Built {
    build_fts(p, q).map(Arc::new).map_err(|e| e.to_string())
}

/// The `--pq` input alone, or the diagonal pair and five seeded pairs.
fn systems(opts: &Options) -> Vec<(String, Built)> {
    if let Some(pq) = &opts.pq {
        return vec![("pq".into(), pq.build().map(Arc::new).map_err(|e| e.to_string()))];
    }
    let (p, q) = diagonal_pair();
    let mut out = vec![("diag".to_string(), build(&p, &q))];
    for (i, (p, q)) in random_pairs(opts.seed, 5).into_iter().enumerate() {
        out.push((format!("random{i}"), build(&p, &q)));
    }
    out
}

fn axiom_units(opts: &Options) -> Vec<Unit<'static>> {
    let seed = opts.seed;
    let mut systems = systems(opts);
    if opts.pq.is_none() {
        let (p, q) = parametric_pair();
        systems.push(("parametric".into(), build(&p, &q)));
    }
    systems
        .into_iter()
        .map(|(name, sys)| {
            unit(format!("axioms.{name}"), move || {
                let sys = sys.clone()?;
                let mode = if sys.is_rational() { AxiomMode::Symbolic } else { AxiomMode::Sampled };
                axiom_check(&sys, mode, seed).map(|r| prefixed(&format!("axioms.{name}"), r)).map_err(|e| e.to_string())
            })
        })
        .collect()
}

const PROBES: [[i64; 3]; 6] = [[1, 1, 1], [1, 2, 3], [1, -1, 2], [2, 1, 1], [1, 1, -3], [3, -2, 1]];

fn peirce_record(sys: &FtsSystem) -> Result<CheckRecord, fts_core::FtsError> {
    let sp = peirce_spectrum(sys)?;
    let want = vec![(qf(-1, 3), 1), (qf(-1, 6), 3), (qf(1, 6), 3), (qf(1, 3), 1)];
    let mismatch = usize::from(sp.eigenvalues != want || sp.unresolved_degree != 0);
    let eig: Vec<String> = sp.eigenvalues.iter().map(|(v, m)| format!("{v}x{m}")).collect();
    Ok(CheckRecord::from_residual("peirce_spectrum", mismatch + sp.l_squared_residual).with_details(json!({
        "eigenvalues": eig,
        "l_squared_residual": sp.l_squared_residual,
        "printed_form_residual": sp.printed_form_residual,
    })))
}

fn delta_record(sys: &FtsSystem) -> Result<CheckRecord, fts_core::FtsError> {
    for pr in PROBES {
        let probe = pr.map(Rational::from);
        match delta_span(sys, &probe) {
            Ok((dim, keeps)) => {
                return Ok(CheckRecord::from_residual("delta_span", usize::from(dim != 2))
                    .with_details(json!({ "dimension": dim, "probe": pr, "pair_forms_in_span": keeps })))
            }
            Err(fts_core::FtsError::BadProbe) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(fts_core::FtsError::BadProbe)
}

fn identity_units(opts: &Options) -> Vec<Unit<'static>> {
    let bound = opts.bound.unwrap_or(4);
    let mut units = Vec::new();
    for (k, (name, sys)) in systems(opts).into_iter().enumerate() {
        let prefix = format!("identities.{name}");
        let s = sys.clone();
        let p = prefix.clone();
        units.push(unit(p.clone(), move || -> Result<Report, String> {
            let sys = s.clone()?;
            let mut rep = identity_suite(&sys).map_err(|e| e.to_string())?;
            let [a, b, c, d] = sys.invariant_residuals();
            rep.push(CheckRecord::from_residual("norm_and_derivative_identities", a + b + c + d));
            rep.push(peirce_record(&sys).map_err(|e| e.to_string())?);
            rep.push(delta_record(&sys).map_err(|e| e.to_string())?);
            Ok(prefixed(&p, rep))
        }));
        // strict-regularity reduction on the first three pairs
        if k < 3 {
            let s = sys.clone();
            units.push(unit(format!("{prefix}.streg"), move || -> Result<Report, String> {
                let sys = s.clone()?;
                let rep = streg_consistency(&sys, bound, &[]).map_err(|e| e.to_string())?;
                Ok(prefixed(&prefix, rep))
            }));
        }
    }
    units.push(unit("identities.z12", || z12_beta_adjoint_check(QShape::TraceFree).map(|r| prefixed("identities", r))));
    units
}

fn chart_units(opts: &Options) -> Vec<Unit<'static>> {
    let seed = opts.seed;
    // Pfaffian charts use their own graded bound; `--bound` does not apply
    let mut units: Vec<Unit<'static>> = Chart::ALL
        .iter()
        .map(|&c| unit(format!("charts.{c}"), move || chart_check(c, None).map(|r| prefixed("charts", r))))
        .collect();
    units.push(unit("charts.rank", move || -> Result<Report, varieties::VarietyError> {
        let u14 = generate(VarietyId::U14)?;
        let mut rep = Report::default();
        let pts = s_chart_points(seed, 5)?;
        rep.push(rank_record("charts.rank.s_chart", &u14, &pts, |r| r == 4)?.with_seed(Some(seed)));
        let pts = singular_x_points(seed, 5);
        rep.push(rank_record("charts.rank.singular_x", &u14, &pts, |r| r <= 3)?.with_seed(Some(seed)));
        let pts = singular_y_points(seed, 5);
        rep.push(rank_record("charts.rank.singular_y", &u14, &pts, |r| r <= 3)?.with_seed(Some(seed)));
        Ok(rep)
    }));
    units
}

fn action_units() -> Vec<Unit<'static>> {
    Action::ALL.iter().map(|&a| unit(format!("actions.{a}"), move || group_action_check(a).map(|r| prefixed("actions", r)))).collect()
}

/// The recorded constant of `D_β = c · quartic` for the S8 pair.
pub const SCROLL_CONSTANT: i64 = 27;

fn fiber_units(opts: &Options) -> Vec<Unit<'static>> {
    let bound = opts.bound.unwrap_or(3);
    vec![
        unit("fibers.s8", move || s8_fiber_check(bound).map(|r| prefixed("fibers", r))),
        unit("fibers.tangential_scroll", || -> Result<Report, varieties::VarietyError> {
            let rel = tangential_scroll_check()?;
            let ok = rel.proportional() && rel.constant == Rational::from(SCROLL_CONSTANT);
            let rec = CheckRecord::from_residual("fibers.tangential_scroll", usize::from(!ok)).with_details(json!({
                "constant": rel.constant.to_string(),
                "cofactor": rel.cofactor.to_text(),
                "quartic": rel.quartic.to_text(),
            }));
            Ok(Report(vec![rec]))
        }),
    ]
}

fn table_record(name: &str, id: VarietyId, block: &[&str], printed: &[(&str, &str)]) -> Result<CheckRecord, String> {
    let sys = generate(id).map_err(|e| e.to_string())?;
    let sol = solve_weights(&weight_constraints(&sys), Some(block)).map_err(|e| e.to_string())?;
    let want = relations(block, printed).map_err(|e| e.to_string())?;
    let param = sol.parametrization.clone().unwrap_or_default();
    let wrong = want.iter().filter(|(k, f)| param.get(*k) != Some(f)).count() + usize::from(param.len() != want.len());
    Ok(CheckRecord::from_residual(name, wrong + usize::from(sol.dimension != 6)).with_details(sol.to_json()))
}

fn weight_units() -> Vec<Unit<'static>> {
    vec![
        unit("weights.u14_relations", || {
            table_record("weights.u14_relations", VarietyId::U14, &U14_FREE_BLOCK, &U14_RELATIONS).map(|r| Report(vec![r]))
        }),
        unit("weights.cl10_relations", || {
            table_record("weights.cl10_relations", VarietyId::CL10, &CL10_FREE_BLOCK, &CL10_RELATIONS)
                .map(|r| Report(vec![r]))
        }),
        unit("weights.u14_graded", || -> Result<Report, String> {
            let sys = generate(VarietyId::U14).map_err(|e| e.to_string())?;
            let rep = graded_report(&sys, &u14_example()).map_err(|e| e.to_string())?;
            let want: Vec<Rational> = [3, 3, 3, 3, 4, 4, 4, 4, 5].map(Rational::from).to_vec();
            let bad = usize::from(rep.equation_degrees != want)
                + usize::from(rep.delta != Rational::from(11))
                + usize::from(rep.ambient_canonical_twist != Rational::from(-22))
                + usize::from(rep.variety_canonical_twist != Rational::from(-11))
                + usize::from(!rep.duality);
            let sol = solve_weights(&weight_constraints(&sys), Some(&U14_FREE_BLOCK)).map_err(|e| e.to_string())?;
            let (eqs, labels) = symbolic_duality(&sys, &sol).map_err(|e| e.to_string())?;
            Ok(Report(vec![
                CheckRecord::from_residual("weights.u14_graded", bad).with_details(rep.to_json()),
                CheckRecord::from_residual("weights.u14_symbolic_duality", usize::from(eqs != labels))
                    .with_details(json!({ "equation_degrees": eqs, "p1_degrees": labels })),
            ]))
        }),
        unit("weights.s8_table", || -> Result<Report, String> {
            let sys = generate(VarietyId::S8).map_err(|e| e.to_string())?;
            let ok = weight_constraints(&sys).satisfied_by(&s8_example()).map_err(|e| e.to_string())?;
            Ok(Report(vec![CheckRecord::from_residual("weights.s8_table", usize::from(!ok))]))
        }),
        unit("weights.base_locus", || -> Result<Report, String> {
            let w = u14_example();
            match base_locus_check_u14(&w.weights) {
                Ok(r) => Ok(prefixed("weights", r)),
                Err(varieties::VarietyError::BaseLocusMismatch(v)) => Ok(Report(vec![CheckRecord::from_residual(
                    "weights.u14.base_locus",
                    v.len(),
                )
                .with_details(json!({ "residual": v, "expected": ["s*t", "y3^2"] }))])),
                Err(e) => Err(e.to_string()),
            }
        }),
    ]
}

fn equivalence_units() -> Vec<Unit<'static>> {
    vec![unit("equivalences", || equivalence_suite().map(|r| prefixed("equivalences", r)))]
}

fn units_for(suite: Suite, opts: &Options) -> Vec<Unit<'static>> {
    match suite {
        Suite::Axioms => axiom_units(opts),
        Suite::Identities => identity_units(opts),
        Suite::Variety(id) => vec![unit(format!("variety.{id}"), move || variety_report(id))],
        Suite::Charts => chart_units(opts),
        Suite::Actions => action_units(),
        Suite::Fibers => fiber_units(opts),
        Suite::Weights => weight_units(),
        Suite::Equivalences => equivalence_units(),
        Suite::All => {
            let mut u = axiom_units(opts);
            u.extend(identity_units(opts));
            u.extend(chart_units(opts));
            u.extend(action_units());
            u.extend(fiber_units(opts));
            u.extend(weight_units());
            u.extend(equivalence_units());
            for id in VarietyId::ALL {
                u.push(unit(format!("generate.{id}"), move || generation_record(id)));
            }
            u
        }
    }
}

fn generation_record(id: VarietyId) -> Result<Report, varieties::VarietyError> {
    if id == VarietyId::P23Transform {
        let ls = varieties::papadakis_transform()?;
        return Ok(Report(vec![CheckRecord::from_residual(format!("generate.{id}"), 0)
            .with_details(json!({ "equations": ls.equations.len(), "r_ranges": ls.r_ranges() }))]));
    }
    let sys = generate(id)?;
    Ok(Report(vec![CheckRecord::from_residual(format!("generate.{id}"), 0).with_details(json!({ "equations": sys.len() }))]))
}

/// Runs a suite; the result is sorted by check name. Errors inside a check
/// become failing records named after the check group.
pub fn run_suite(suite: Suite, opts: &Options) -> Vec<CheckReport> {
    let units = units_for(suite, opts);
    let timings = opts.timings;
    let mut out: Vec<CheckReport> = units
        .par_iter()
        .flat_map_iter(|(name, f)| {
            let t = Instant::now();
            let rep = f();
            let ms = if timings { t.elapsed().as_millis() as u64 } else { 0 };
            let records = match rep {
                Ok(r) => r.0,
                Err(e) => vec![CheckRecord::from_residual(format!("{name}.error"), 1).with_details(json!({ "error": e }))],
            };
            records.into_iter().map(move |r| CheckReport {
                check_name: r.check,
                status: r.status,
                residual_terms: r.residual_terms,
                seed: r.seed,
                details: r.details,
                duration_ms: ms,
            })
        })
        .collect();
    out.sort_by(|a, b| a.check_name.cmp(&b.check_name));
    out
}

/// Exit code for a finished run: 1 on any failure, 3 on inconclusive under
/// `strict`, else 0.
pub fn exit_code(reports: &[CheckReport], strict: bool) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else if strict && reports.iter().any(|r| r.status == Status::Inconclusive) {
        3
    } else {
        0
    }
}

pub fn to_json_lines(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&serde_json::to_string(r).expect("serializable"));
        out.push('\n');
    }
    out
}
