use exact_arith::{Polynomial, Ring};
use poly_linalg::{
    cross_product, det, macaulay_membership, pfaffians_4x4, reduce_mod_principal, wedge2, PolyMatrix, PolyVector,
};
use proptest::prelude::*;

fn ring() -> Ring {
    Ring::of(&["a", "b", "c", "d", "e", "f"])
}

fn lin(coeffs: &[i64]) -> Polynomial {
    let r = ring();
    let mut acc = Polynomial::zero(&r);
    for (i, &c) in coeffs.iter().enumerate() {
        acc = &acc + &Polynomial::var_index(&r, i).scale_i(c);
    }
    acc
}

fn vec3() -> impl Strategy<Value = PolyVector> {
    prop::collection::vec(prop::collection::vec(-3i64..4, 6), 3)
        .prop_map(|cs| PolyVector::from_vec(cs.iter().map(|c| lin(c)).collect()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cross_is_antisymmetric_and_orthogonal(u in vec3(), v in vec3()) {
        let uv = cross_product(&u, &v).unwrap();
        let vu = cross_product(&v, &u).unwrap();
        prop_assert_eq!(&uv, &-&vu);
        prop_assert!(u.dot(&uv).is_zero());
        prop_assert!(v.dot(&uv).is_zero());
    }

    #[test]
    fn wedge_of_outer_product_vanishes(u in vec3(), s in prop::collection::vec(-3i64..4, 6), t in prop::collection::vec(-3i64..4, 6)) {
        let (ls, lt) = (lin(&s), lin(&t));
        let rows = vec![u.entries().iter().map(|e| e * &ls).collect(), u.entries().iter().map(|e| e * &lt).collect()];
        let m = PolyMatrix::from_rows(&ring(), rows).unwrap();
        prop_assert!(wedge2(&m).unwrap().is_zero());
    }

    #[test]
    fn certificates_reexpand(cs in prop::collection::vec(prop::collection::vec(-2i64..3, 6), 3)) {
        let r = ring();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let gens = vec![p("a*b - c"), p("d^2 - e*f"), p("a*f + b")];
        let mut target = Polynomial::zero(&r);
        for (c, g) in cs.iter().zip(&gens) {
            target = &target + &(&lin(c) * g);
        }
        match macaulay_membership(&target, &gens, 3) {
            Ok(cert) => prop_assert!(cert.verify()),
            Err(e) => prop_assert!(false, "expected membership: {e}"),
        }
    }

    #[test]
    fn reduction_zero_iff_divisible(c in prop::collection::vec(-3i64..4, 6), extra in 0usize..2) {
        let r = ring();
        let g = Polynomial::parse(&r, "a*d - b*c - 1").unwrap();
        let mut f = &g * &lin(&c);
        if extra == 1 {
            f = &f + &Polynomial::v(&r, "e");
        }
        let rem = reduce_mod_principal(&f, &g).unwrap();
        prop_assert_eq!(rem.is_zero(), f.exact_divide(&g).is_ok());
    }
}

#[test]
fn pfaffians_square_to_minors() {
    let names: Vec<String> = (0..10).map(|i| format!("s{i}")).collect();
    let r = Ring::new(&names).unwrap();
    let mut k = 0;
    let mut m = PolyMatrix::zeros(&r, 5, 5);
    for i in 0..5 {
        for j in i + 1..5 {
            let v = Polynomial::var_index(&r, k);
            k += 1;
            m.set(i, j, v.clone());
            m.set(j, i, -v);
        }
    }
    let pfs = pfaffians_4x4(&m).unwrap();
    for (i, pf) in pfs.iter().enumerate() {
        let keep: Vec<usize> = (0..5).filter(|&x| x != i).collect();
        assert_eq!(pf.pow(2), det(&m.submatrix(&keep, &keep)).unwrap());
    }
    // the Pfaffian vector annihilates the skew matrix (syzygy of a 5x5 skew matrix)
    let v = PolyVector::from_vec(pfs);
    assert!(m.mul_vec(&v).is_zero());
}
