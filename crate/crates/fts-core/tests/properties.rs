use exact_arith::Rational;
use fts_core::*;
use poly_linalg::rational_rank;
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::array::uniform3(prop::array::uniform3(-2i64..=2))
}

fn to_q(m: [[i64; 3]; 3]) -> [[Rational; 3]; 3] {
    m.map(|r| r.map(Rational::from))
}

fn point(ring: &exact_arith::Ring, c: [i64; 8]) -> FtsPoint {
    FtsPoint::from_rationals(ring, &c.map(Rational::from))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn gram_rank_tracks_trace_rank(a in matrix(), b in matrix()) {
        let (p, q) = rational_pair(&to_q(a), &to_q(b));
        if let Ok(sys) = build_fts(&p, &q) {
            let r = sys.params().clone();
            let v = sys.view(&r).unwrap();
            let gram: Vec<Vec<Rational>> = (0..8)
                .map(|i| (0..8).map(|j| v.omega(&FtsPoint::basis(&r, i), &FtsPoint::basis(&r, j)).constant_term()).collect())
                .collect();
            let rb = rational_rank(&sys.beta_matrix().to_rationals().unwrap());
            prop_assert_eq!(rational_rank(&gram), 2 + 2 * rb);
            prop_assert_eq!(rational_rank(&gram) == 8, !sys.dbeta().is_zero());
        }
    }

    #[test]
    fn triple_symmetric_and_omega_skew(
        pa in prop::array::uniform8(-3i64..=3),
        pb in prop::array::uniform8(-3i64..=3),
        pc in prop::array::uniform8(-3i64..=3),
        seed in 0u64..1000,
    ) {
        let sys = random_systems(seed, 1).pop().unwrap();
        let r = sys.params().clone();
        let v = sys.view(&r).unwrap();
        let (a, b, c) = (point(&r, pa), point(&r, pb), point(&r, pc));
        let t = v.triple(&a, &b, &c);
        prop_assert_eq!(&t, &v.triple(&c, &a, &b));
        prop_assert_eq!(&t, &v.triple(&b, &a, &c));
        prop_assert_eq!(&t, &v.triple_literal(&a, &b, &c));
        prop_assert!((&v.omega(&a, &b) + &v.omega(&b, &a)).is_zero());
        prop_assert_eq!(v.omega(&v.cube(&a), &a), v.quartic_f(&a));
    }
}

#[test]
fn omega_of_basis() {
    let (p, q) = diagonal_pair();
    let sys = build_fts(&p, &q).unwrap();
    let r = sys.params().clone();
    let v = sys.view(&r).unwrap();
    assert_eq!(v.omega(&FtsPoint::e_s(&r), &FtsPoint::e_t(&r)).constant_term(), Rational::one());
}
