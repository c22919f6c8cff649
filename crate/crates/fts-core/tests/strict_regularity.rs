use exact_arith::{qf, Polynomial, Rational, Ring};
use fts_core::*;
use poly_linalg::PolyVector;

fn diag() -> FtsSystem {
    let (p, q) = diagonal_pair();
    build_fts(&p, &q).unwrap()
}

fn listed_equations(ring: &Ring) -> Vec<Polynomial> {
    [
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
    .map(|e| Polynomial::parse(ring, e).unwrap())
    .collect()
}

#[test]
fn rescaled_equations_match_the_segre_cone() {
    let sys = diag();
    let eqs = streg_equations(&sys, Some((qf(-1, 3), qf(-1, 3)))).unwrap();
    let ours: Vec<Polynomial> = eqs.polynomials().iter().map(|p| p.primitive()).collect();
    let listed: Vec<Polynomial> = listed_equations(eqs.ring()).iter().map(|p| p.primitive()).collect();
    assert_eq!(ours.len(), 9);
    for l in &listed {
        assert!(ours.contains(l), "missing {l}");
    }
    for o in &ours {
        assert!(listed.contains(o), "extra {o}");
    }
}

#[test]
fn unscaled_equations_differ() {
    let sys = diag();
    let eqs = streg_equations(&sys, None).unwrap();
    let listed: Vec<Polynomial> = listed_equations(eqs.ring()).iter().map(|p| p.primitive()).collect();
    assert!(!listed.contains(&eqs.get("sx1").unwrap().primitive()));
}

#[test]
fn chart_point_and_cone_point() {
    let sys = diag();
    let eqs = streg_equations(&sys, None).unwrap();
    let r = eqs.ring().clone();
    let v = sys.view(&r).unwrap();
    let y0 = PolyVector::from_constants(&r, &[Rational::one(), Rational::one(), Rational::one()]);
    let x0 = v.sharp(&y0, Side::Y);
    let t0 = v.beta(&x0, &y0).scale(&qf(1, 3));
    let mut vals: Vec<(String, Rational)> = vec![("s".into(), Rational::one()), ("t".into(), t0.constant_value().unwrap())];
    for i in 0..3 {
        vals.push((format!("x{}", i + 1), x0[i].constant_value().unwrap()));
        vals.push((format!("y{}", i + 1), Rational::one()));
    }
    let pt: Vec<Rational> = r.names().iter().map(|n| vals.iter().find(|(m, _)| m == n).unwrap().1.clone()).collect();
    for (l, e) in eqs.equations() {
        assert!(e.eval(&pt).is_zero(), "{l}");
        assert!(e.eval(&vec![Rational::zero(); r.nvars()]).is_zero());
    }
}

#[test]
fn seeded_pairs_certify() {
    for sys in random_systems(42, 2) {
        let rep = streg_consistency(&sys, 4, &[]).unwrap();
        assert_eq!(rep.0.len(), 8);
        assert!(rep.all_pass(), "{:?}", rep.failures());
    }
}

#[test]
fn removing_a_generator_breaks_certification() {
    let rep = streg_consistency(&diag(), 4, &["xPy"]).unwrap();
    assert!(rep.0.iter().any(|r| r.status == Status::Inconclusive));
}

#[test]
fn delta_spans() {
    let one = Rational::one();
    assert_eq!(delta_span_dim(&diag(), &[one.clone(), one.clone(), one.clone()]).unwrap(), 2);
    let probes = [[1i64, 2, 3], [1, -1, 2], [2, 1, 1], [1, 1, -3], [3, -2, 1]];
    for sys in random_systems(42, 3) {
        let v = sys.view(sys.forms_ring()).unwrap();
        let probe = probes
            .iter()
            .map(|p| p.map(Rational::from))
            .find(|p| !v.nx(&PolyVector::from_constants(v.ring(), p)).is_zero())
            .expect("some probe has nonzero norm");
        assert_eq!(delta_span_dim(&sys, &probe).unwrap(), 2);
    }
}
