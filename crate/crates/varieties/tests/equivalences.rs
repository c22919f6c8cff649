use exact_arith::Polynomial;
use fts_core::{EquationSystem, Status};
use varieties::*;

#[test]
fn all_dictionaries_are_equivalent() {
    let rep = equivalence_suite().unwrap();
    for (name, _, _) in EQUIVALENCES {
        let r = rep.get(name).unwrap();
        assert_eq!(r.status, Status::Pass, "{name}: {:?}", r.details);
    }
    assert!(rep.all_pass(), "{:?}", rep.failures());
}

#[test]
fn s8_presentations_are_linearly_related() {
    let e = dictionary_equivalence("equiv.S8_raw_vs_S8").unwrap();
    assert!(e.equivalent());
    assert!(e.linear);
}

fn flip_one_sign(sys: EquationSystem) -> EquationSystem {
    let mut eqs = sys.equations().to_vec();
    let f = &eqs[0].1;
    let mut terms = f.terms().to_vec();
    terms[0].1 = -terms[0].1.clone();
    eqs[0].1 = Polynomial::from_terms(f.ring(), terms);
    EquationSystem::new(&sys.name, sys.ring(), eqs).unwrap()
}

#[test]
fn a_flipped_sign_breaks_equivalence() {
    let e = dictionary_equivalence_with("equiv.S8_raw_vs_S8", flip_one_sign).unwrap();
    assert!(!e.equivalent());
    assert!(!e.missing().is_empty());
    assert_eq!(e.to_record().status, Status::Inconclusive);
}

#[test]
fn unknown_equivalence_is_rejected() {
    assert!(matches!(dictionary_equivalence("equiv.nope"), Err(VarietyError::UnknownId(_))));
}

#[test]
fn template_dictionaries_reproduce_generators() {
    for id in VarietyId::ALL {
        if let Some(d) = template_dictionary(id) {
            let via = d.apply_system(f22_template(), id.as_str()).unwrap();
            let direct = generate(id).unwrap();
            assert_eq!(via.polynomials(), direct.polynomials(), "{id}");
        }
    }
}

#[test]
fn generated_degrees_are_bounded() {
    let f22 = generate(VarietyId::F22).unwrap();
    assert_eq!(f22.len(), 9);
    // quadratic in the point coordinates, parameters as constants
    let point: Vec<usize> = fts_core::point_names("").iter().map(|n| f22.ring().index_of(n).unwrap()).collect();
    for (l, f) in f22.equations() {
        let deg = f.terms().iter().map(|(m, _)| point.iter().map(|&i| m.exps()[i] as u32).sum::<u32>()).max();
        assert_eq!(deg, Some(2), "{l}");
    }
    let six = [VarietyId::F22, VarietyId::CL10, VarietyId::CL10Alt];
    for id in VarietyId::ALL {
        if id == VarietyId::P23Transform {
            continue;
        }
        let bound = if six.contains(&id) { 6 } else { 5 };
        for (l, f) in generate(id).unwrap().equations() {
            assert!(f.total_degree().unwrap_or(0) <= bound, "{id} {l}");
        }
    }
}

#[test]
fn b6_rewrite_drops_d2() {
    let rep = b6_cone_check(true).unwrap();
    assert_eq!(rep.0.len(), 9);
    assert!(rep.all_pass());
    let sys = b6_cone_rewrite(true).unwrap();
    let d2 = sys.ring().require("d2").unwrap();
    assert!(sys.polynomials().iter().all(|f| !f.variables().contains(&d2)));
}

#[test]
fn b6_without_cubic_term_keeps_d2() {
    match b6_cone_rewrite(false) {
        Err(VarietyError::ResidualDependence { var, .. }) => assert_eq!(var, "d2"),
        other => panic!("{other:?}"),
    }
    assert!(b6_report(false).any_fail());
}
