use exact_arith::Rational;
use proptest::prelude::*;
use varieties::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn fiber_class_is_scale_invariant(d in prop::array::uniform4(-3i64..=3), l in 1i64..=4) {
        let a = d.map(Rational::from);
        let b = d.map(|c| Rational::from(c * l));
        prop_assert_eq!(s8_fiber(&a).unwrap().1, s8_fiber(&b).unwrap().1);
    }

    #[test]
    fn s_chart_points_are_smooth(seed in 0u64..1000) {
        let u14 = generate(VarietyId::U14).unwrap();
        for p in s_chart_points(seed, 2).unwrap() {
            prop_assert_eq!(jacobian_rank_at(&u14, &p).unwrap(), 4);
        }
    }

    #[test]
    fn singular_points_drop_rank(seed in 0u64..1000) {
        let u14 = generate(VarietyId::U14).unwrap();
        for p in singular_x_points(seed, 1).iter().chain(&singular_y_points(seed, 1)) {
            prop_assert!(jacobian_rank_at(&u14, p).unwrap() <= 3);
        }
    }
}

#[test]
fn identity_dictionary_is_neutral() {
    let u14 = generate(VarietyId::U14).unwrap();
    let id = CoordinateDictionary::identity(u14.ring());
    assert_eq!(id.apply_system(&u14, "U14").unwrap().polynomials(), u14.polynomials());
    let both = u14_dictionary().then(&id).unwrap();
    assert_eq!(both.images(), u14_dictionary().images());
}
