//! Acceptance battery. Prints one PASS/FAIL line per criterion and exits
//! non-zero when any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use exact_arith::{qf, Polynomial, Rational};
use fts_core::*;
use poly_linalg::PolyVector;
use varieties::*;
use weights::tables::{relations, u14_example, CL10_FREE_BLOCK, CL10_RELATIONS, U14_FREE_BLOCK, U14_RELATIONS};
use weights::{graded_report, solve_weights, weight_constraints};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn all_pass(rep: &Report, what: &str) -> Outcome {
    let bad: Vec<String> = rep.failures().iter().map(|r| format!("{}={:?}", r.check, r.status)).collect();
    ensure(bad.is_empty(), format!("{what}: {}", bad.join(", ")))
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn diag() -> FtsSystem {
    let (p, q) = diagonal_pair();
    build_fts(&p, &q).unwrap()
}

// x♯ = ᵗPx × ᵗQx for the diagonal pair, in machine integers
fn sharp_diag(x: [i64; 3]) -> [i64; 3] {
    let a = [2 * x[0], -x[1], -x[2]];
    let b = [x[0], -2 * x[1], x[2]];
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

// (x♯)♯ = P x♯ × Q x♯; P and Q are diagonal so transposition does not matter
fn sharp_sharp_diag(x: [i64; 3]) -> [i64; 3] {
    sharp_diag(sharp_diag(x))
}

fn c1() -> Outcome {
    let sys = diag();
    let f = sys.forms_ring();
    ensure(sys.nx() == &Polynomial::parse(f, "-27*x1*x2*x3").unwrap(), format!("Nx = {}", sys.nx()))?;
    for i in 0..3 {
        for j in 0..3 {
            let want = Rational::from(if i == j { 9 } else { 0 });
            ensure(sys.beta_matrix().get(i, j).constant_value() == Some(want), "BetaMatrix != 9I")?;
        }
    }
    ensure(sys.dbeta().constant_value() == Some(Rational::from(729)), "Dbeta != 729")?;
    // integer oracle: (x♯)♯ = Nx(x)·x at sample points
    let ix = |n: &str| f.index_of(n).unwrap();
    for x in [[1, 2, 3], [-2, 5, 1], [4, -1, -3], [7, 0, 2]] {
        let mut pt = vec![Rational::zero(); f.nvars()];
        for (k, n) in ["x1", "x2", "x3"].iter().enumerate() {
            pt[ix(n)] = Rational::from(x[k]);
        }
        let n = sys.nx().eval(&pt);
        let ss = sharp_sharp_diag(x);
        for k in 0..3 {
            ensure(Rational::from(ss[k]) == &n * &Rational::from(x[k]), format!("oracle mismatch at {x:?}"))?;
        }
    }
    let (p, q) = parametric_pair();
    let mut systems = random_systems(42, 5);
    systems.push(build_fts(&p, &q).map_err(err)?);
    for s in &systems {
        ensure(s.invariant_residuals() == [0, 0, 0, 0], format!("invariants {:?}", s.invariant_residuals()))?;
    }
    Ok(())
}

fn rational_systems() -> Vec<FtsSystem> {
    let mut v = vec![diag()];
    v.extend(random_systems(42, 5));
    v
}

fn c2() -> Outcome {
    for sys in rational_systems() {
        ensure(!sys.dbeta().is_zero(), "Dbeta = 0")?;
        let rep = axiom_check(&sys, AxiomMode::Symbolic, 42).map_err(err)?;
        for name in ["A1", "A2", "A3", "pentagram"] {
            ensure(rep.get(name).map(|r| r.status) == Some(Status::Pass), format!("{name} does not pass"))?;
        }
    }
    Ok(())
}

fn c3() -> Outcome {
    let want = vec![(qf(-1, 3), 1), (qf(-1, 6), 3), (qf(1, 6), 3), (qf(1, 3), 1)];
    for sys in rational_systems() {
        let sp = peirce_spectrum(&sys).map_err(err)?;
        ensure(sp.eigenvalues == want && sp.unresolved_degree == 0, format!("spectrum {:?}", sp.eigenvalues))?;
        ensure(sp.l_squared_residual == 0, format!("L^2 residual {}", sp.l_squared_residual))?;
    }
    Ok(())
}

fn c4() -> Outcome {
    let eqs = streg_equations(&diag(), Some((qf(-1, 3), qf(-1, 3)))).map_err(err)?;
    let listed: Vec<Polynomial> = [
        "s*x1 - y2*y3",
        "s*x2 - y1*y3",
        "s*x3 - y1*y2",
        "t*y1 - x2*x3",
        "t*y2 - x1*x3",
        "t*y3 - x1*x2",
        "s*t - 1/3*(x1*y1 + x2*y2 + x3*y3)",
        "2*x1*y1 - x2*y2 - x3*y3",
        "x1*y1 - 2*x2*y2 + x3*y3",
    ]
    .iter()
    .map(|e| Polynomial::parse(eqs.ring(), e).unwrap().primitive())
    .collect();
    let ours: Vec<Polynomial> = eqs.polynomials().iter().map(|p| p.primitive()).collect();
    ensure(ours.len() == 9, "not 9 equations")?;
    ensure(listed.iter().all(|l| ours.contains(l)) && ours.iter().all(|o| listed.contains(o)), "sets differ")
}

fn c5() -> Outcome {
    let mut systems = vec![diag()];
    systems.extend(random_systems(42, 2));
    for sys in &systems {
        let rep = streg_consistency(sys, 4, &[]).map_err(err)?;
        all_pass(&rep, "certification")?;
    }
    let neg = streg_consistency(&diag(), 4, &["xPy"]).map_err(err)?;
    ensure(!neg.all_pass(), "negative control still certified")
}

fn c6() -> Outcome {
    let one = Rational::one();
    ensure(delta_span_dim(&diag(), &[one.clone(), one.clone(), one]).map_err(err)? == 2, "diag span")?;
    let probes = [[1i64, 2, 3], [1, -1, 2], [2, 1, 1], [1, 1, -3], [3, -2, 1]];
    for sys in random_systems(42, 3) {
        let v = sys.view(sys.forms_ring()).map_err(err)?;
        let probe = probes
            .iter()
            .map(|p| p.map(Rational::from))
            .find(|p| !v.nx(&PolyVector::from_constants(v.ring(), p)).is_zero())
            .ok_or("no probe with Nx != 0")?;
        ensure(delta_span_dim(&sys, &probe).map_err(err)? == 2, "seeded span")?;
    }
    Ok(())
}

fn c7() -> Outcome {
    for c in Chart::ALL {
        all_pass(&chart_check(c, None).map_err(err)?, c.as_str())?;
    }
    Ok(())
}

fn c8() -> Outcome {
    for a in Action::ALL {
        all_pass(&group_action_check(a).map_err(err)?, a.as_str())?;
    }
    Ok(())
}

fn c9() -> Outcome {
    for (id, block, printed) in
        [(VarietyId::U14, &U14_FREE_BLOCK, &U14_RELATIONS[..]), (VarietyId::CL10, &CL10_FREE_BLOCK, &CL10_RELATIONS[..])]
    {
        let sys = generate(id).map_err(err)?;
        let sol = solve_weights(&weight_constraints(&sys), Some(block)).map_err(err)?;
        ensure(sol.dimension == 6, format!("{id}: dimension {}", sol.dimension))?;
        ensure(sol.parametrization == Some(relations(block, printed).map_err(err)?), format!("{id}: table differs"))?;
    }
    let u14 = generate(VarietyId::U14).map_err(err)?;
    let rep = graded_report(&u14, &u14_example()).map_err(err)?;
    let q = |v: &[i64]| v.iter().map(|&n| Rational::from(n)).collect::<Vec<_>>();
    ensure(rep.equation_degrees == q(&[3, 3, 3, 3, 4, 4, 4, 4, 5]), "equation degrees")?;
    ensure(rep.delta == Rational::from(11), "delta")?;
    ensure(rep.ambient_canonical_twist == Rational::from(-22), "ambient twist")?;
    ensure(rep.variety_canonical_twist == Rational::from(-11), "variety twist")?;
    ensure(rep.duality && rep.p3_degrees == q(&[6, 7, 7, 7, 7, 8, 8, 8, 8]), "P3 duality")
}

fn c10() -> Outcome {
    let w: BTreeMap<String, Rational> = u14_example().weights;
    base_locus_check_u14(&w).map(|_| ()).map_err(err)
}

fn c11() -> Outcome {
    all_pass(&equivalence_suite().map_err(err)?, "equivalences")?;
    let b6 = b6_cone_rewrite(true).map_err(err)?;
    let d2 = b6.ring().index_of("d2");
    ensure(d2.map(|i| b6.polynomials().iter().all(|p| p.terms().iter().all(|(m, _)| m.exps()[i] == 0))).unwrap_or(true), "d2 remains")
}

fn c12() -> Outcome {
    let golden = include_str!("../../varieties/tests/golden/tangential_scroll.txt").trim();
    let rel = tangential_scroll_check().map_err(err)?;
    ensure(rel.proportional(), "not proportional")?;
    ensure(rel.constant.to_string() == golden, format!("constant {} vs golden {golden}", rel.constant))?;
    let rep = s8_fiber_check(3).map_err(err)?;
    ensure(rep.0.len() == 3, "three fibers")?;
    all_pass(&rep, "fibers")
}

fn c13() -> Outcome {
    ensure(z12_beta_adjoint_residual(QShape::TraceFree).map_err(err)?.is_zero(), "residual under Tr Q = 0")?;
    ensure(!z12_beta_adjoint_residual(QShape::Free).map_err(err)?.is_zero(), "identity survives freeing q11")
}

fn c14() -> Outcome {
    let u14 = generate(VarietyId::U14).map_err(err)?;
    let pts = s_chart_points(42, 5).map_err(err)?;
    ensure(rank_record("s_chart", &u14, &pts, |r| r == 4).map_err(err)?.status == Status::Pass, "rank 4 on charts")?;
    for (name, pts) in [("S_x", singular_x_points(42, 5)), ("S_y", singular_y_points(42, 5))] {
        ensure(rank_record(name, &u14, &pts, |r| r <= 3).map_err(err)?.status == Status::Pass, format!("rank on {name}"))?;
    }
    Ok(())
}

fn c15() -> Outcome {
    let dir = std::env::temp_dir().join(format!("fts-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(err)?;
    let mut outputs = Vec::new();
    for k in 0..2 {
        let out = dir.join(format!("run{k}.jsonl"));
        Command::new(env!("CARGO_BIN_EXE_fts"))
            .args(["check", "--suite", "all", "--seed", "42", "--json"])
            .arg(&out)
            .output()
            .map_err(err)?;
        outputs.push(std::fs::read(&out).map_err(err)?);
    }
    let _ = std::fs::remove_dir_all(&dir);
    ensure(!outputs[0].is_empty(), "empty report")?;
    ensure(outputs[0] == outputs[1], "reports differ")
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("construction invariants", c1),
        ("axioms", c2),
        ("Peirce spectrum", c3),
        ("rescaled diagonal equations", c4),
        ("strict-regularity reduction", c5),
        ("Delta span dimension", c6),
        ("U14 charts", c7),
        ("group actions", c8),
        ("weight systems", c9),
        ("U14 base locus", c10),
        ("cluster dictionaries and B6", c11),
        ("S8 geometry", c12),
        ("Z12 adjugate identity", c13),
        ("Jacobian ranks", c14),
        ("determinism", c15),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match res {
            Ok(()) => println!("criterion {:>2} PASS  {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
