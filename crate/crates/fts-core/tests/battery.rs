use exact_arith::qf;
use fts_core::*;

fn systems() -> Vec<FtsSystem> {
    let (p, q) = diagonal_pair();
    let mut v = vec![build_fts(&p, &q).unwrap()];
    v.extend(random_systems(42, 5));
    v
}

#[test]
fn axioms_hold_symbolically() {
    for sys in systems() {
        let rep = axiom_check(&sys, AxiomMode::Symbolic, 42).unwrap();
        assert_eq!(rep.0.len(), 4);
        assert!(rep.all_pass(), "{:?}", rep.failures());
    }
}

#[test]
fn parametric_axioms_in_sampled_mode() {
    let (p, q) = parametric_pair();
    let sys = build_fts(&p, &q).unwrap();
    let rep = axiom_check(&sys, AxiomMode::Sampled, 42).unwrap();
    assert!(rep.all_pass(), "{:?}", rep.failures());
    assert!(rep.0.iter().all(|r| r.seed == Some(42)));
}

#[test]
fn identities_hold_symbolically() {
    for sys in systems() {
        let rep = identity_suite(&sys).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failures());
    }
}

#[test]
fn peirce_spectrum_is_fixed() {
    let want = vec![(qf(-1, 3), 1), (qf(-1, 6), 3), (qf(1, 6), 3), (qf(1, 3), 1)];
    for sys in systems() {
        let sp = peirce_spectrum(&sys).unwrap();
        assert_eq!(sp.eigenvalues, want);
        assert_eq!(sp.l_squared_residual, 0);
    }
}

#[test]
fn report_serializes() {
    let (p, q) = diagonal_pair();
    let sys = build_fts(&p, &q).unwrap();
    let rep = axiom_check(&sys, AxiomMode::Sampled, 3).unwrap();
    let s = serde_json::to_string(&rep).unwrap();
    assert!(s.starts_with("[{\"check\":\"A1\",\"status\":\"pass\",\"residual_terms\":0,\"seed\":3}"), "{s}");
}
