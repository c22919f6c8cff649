use exact_arith::{laurent_substitute, LaurentPolynomial, Monomial, Polynomial, Rational, Ring};
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::of(&["x", "y", "z", "u", "v", "w"])
}

fn poly_strategy(max_terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (prop::collection::vec(0u16..3, 3), -6i64..7, 1i64..4),
        0..max_terms,
    )
    .prop_map(|ts| {
        let r = ring();
        Polynomial::from_terms(
            &r,
            ts.into_iter().map(|(e, n, d)| {
                let mut ex = e;
                ex.extend([0, 0, 0]);
                (Monomial::from_exps(ex), Rational::frac(n, d))
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_order_does_not_matter(a in poly_strategy(6), b in poly_strategy(6), c in poly_strategy(6)) {
        let left = &(&a * &b) + &(&a * &c);
        let right = &a * &(&b + &c);
        prop_assert_eq!(left.terms(), right.terms());
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&c + &b));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn derivative_is_linear(a in poly_strategy(6), b in poly_strategy(6)) {
        let dir = ["u", "v", "w"];
        let at = ["x", "y", "z"];
        let d = |f: &Polynomial| f.directional_derivative(&dir, &at).unwrap();
        prop_assert_eq!(d(&(&a + &b)), &d(&a) + &d(&b));
        // linear in the primed block: doubling the direction doubles the result
        let r = ring();
        let doubled = d(&a).subs(&[
            ("u", Polynomial::parse(&r, "2*u").unwrap()),
            ("v", Polynomial::parse(&r, "2*v").unwrap()),
            ("w", Polynomial::parse(&r, "2*w").unwrap()),
        ]).unwrap();
        prop_assert_eq!(doubled, d(&a).scale_i(2));
    }

    #[test]
    fn exact_divide_round_trip(a in poly_strategy(5), g in poly_strategy(4)) {
        prop_assume!(!g.is_zero());
        let f = &a * &g;
        let q = f.exact_divide(&g).unwrap();
        prop_assert_eq!(&q * &g, f.clone());
        if let Ok(q2) = (&f + &Polynomial::v(&ring(), "u")).exact_divide(&g) {
            prop_assert_eq!(&q2 * &g, &f + &Polynomial::v(&ring(), "u"));
        }
    }

    #[test]
    fn remainder_zero_iff_divisible(a in poly_strategy(5), g in poly_strategy(3), extra in poly_strategy(3)) {
        prop_assume!(!g.is_zero());
        let f = &(&a * &g) + &extra;
        let divisible = f.exact_divide(&g).is_ok();
        let rem_zero = f.div_rem(&g).unwrap().1.is_zero();
        prop_assert_eq!(divisible, rem_zero);
    }

    #[test]
    fn laurent_round_trip(a in poly_strategy(8)) {
        let r = Ring::of(&["x", "y", "z", "u", "v", "w"]);
        let l = LaurentPolynomial::from_polynomial(&a, "x").unwrap();
        prop_assert_eq!(l.to_polynomial().unwrap(), a.clone());
        let flip = vec![("x", -&LaurentPolynomial::var(&r, "x", "x").unwrap())];
        let twice = laurent_substitute(&laurent_substitute(&l, &flip).unwrap(), &flip).unwrap();
        prop_assert_eq!(twice, l);
    }

    #[test]
    fn text_round_trip(a in poly_strategy(8)) {
        let back = Polynomial::parse(&ring(), &a.to_string()).unwrap();
        prop_assert_eq!(back, a);
    }
}
