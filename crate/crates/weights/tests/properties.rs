use exact_arith::Rational;
use proptest::prelude::*;
use varieties::{generate, VarietyId};
use weights::tables::U14_FREE_BLOCK;
use weights::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn dimension_ignores_equation_order(seed in any::<u64>()) {
        let sys = generate(VarietyId::S8).unwrap();
        let mut eqs = sys.equations().to_vec();
        let k = (seed as usize) % eqs.len();
        eqs.rotate_left(k);
        eqs.reverse();
        let shuffled = fts_core::EquationSystem::new("S8", sys.ring(), eqs).unwrap();
        let a = solve_weights(&weight_constraints(&sys), None).unwrap().dimension;
        let b = solve_weights(&weight_constraints(&shuffled), None).unwrap().dimension;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn parametrized_weights_are_admissible(w in prop::array::uniform6(-5i64..=5)) {
        let sys = generate(VarietyId::U14).unwrap();
        let wcs = weight_constraints(&sys);
        let sol = solve_weights(&wcs, Some(&U14_FREE_BLOCK)).unwrap();
        let free: Vec<(&str, Rational)> = U14_FREE_BLOCK.iter().zip(w).map(|(n, v)| (*n, Rational::from(v))).collect();
        let a = sol.evaluate(&free).unwrap();
        prop_assert!(wcs.satisfied_by(&a).unwrap());
        let rep = graded_report(&sys, &a).unwrap();
        prop_assert!(rep.duality);
        prop_assert_eq!(&rep.variety_canonical_twist - &rep.ambient_canonical_twist, rep.delta);
    }
}

#[test]
fn dimension_ignores_variable_order() {
    let sys = generate(VarietyId::U14).unwrap();
    let names: Vec<&str> = sys.ring().names().iter().rev().map(|s| s.as_str()).collect();
    let r = exact_arith::Ring::of(&names);
    let moved = sys.map("U14_rev", &r, |f| f.embed(&r).unwrap()).unwrap();
    let a = solve_weights(&weight_constraints(&sys), None).unwrap().dimension;
    let b = solve_weights(&weight_constraints(&moved), None).unwrap().dimension;
    assert_eq!(a, b);
}
