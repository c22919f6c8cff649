use exact_arith::{laurent_substitute, qf, LaurentPolynomial, Polynomial, Rational, Ring};
use fts_core::EquationSystem;
use poly_linalg::{det, PolyMatrix, PolyVector};
use serde_json::{json, Value};

use crate::generate::f22_template;
use crate::VarietyError;

/// Equations whose polynomials may carry negative powers of one variable.
#[derive(Clone, Debug)]
pub struct LaurentSystem {
    pub name: String,
    pub ring: Ring,
    pub r: String,
    pub equations: Vec<(String, LaurentPolynomial)>,
}

impl LaurentSystem {
    /// Smallest and largest exponent of the distinguished variable per equation.
    pub fn r_ranges(&self) -> Vec<(String, Option<(i32, i32)>)> {
        self.equations.iter().map(|(l, f)| (l.clone(), f.r_exponent_range())).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "variables": self.ring.names(),
            "laurent_variable": self.r,
            "equations": self.equations.iter().map(|(l, f)| {
                let range = f.r_exponent_range();
                json!({
                    "label": l,
                    "text": f.to_string(),
                    "r_min": range.map(|r| r.0),
                    "r_max": range.map(|r| r.1),
                })
            }).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("# {}\n# variables: {}\n# laurent in: {}\n", self.name, self.ring.names().join(", "), self.r);
        for (l, f) in &self.equations {
            let range = f.r_exponent_range().map(|(a, b)| format!("[{a}, {b}]")).unwrap_or_else(|| "-".into());
            out.push_str(&format!("{l} {range}: {f}\n"));
        }
        out
    }
}

pub fn p23_ring() -> Ring {
    let mut names: Vec<String> = Vec::new();
    for b in ["X", "Y"] {
        for i in 1..=3 {
            names.push(format!("{b}{i}"));
        }
    }
    for k in 1..=2 {
        for ij in ["12", "13", "23"] {
            names.push(format!("a{k}_{ij}"));
        }
    }
    for k in 1..=2 {
        for ij in ["11", "12", "13", "22", "23", "33"] {
            names.push(format!("b{k}_{ij}"));
        }
    }
    names.extend(["s0", "s1", "r"].map(String::from));
    Ring::new(&names).expect("distinct")
}

fn skew(ring: &Ring, k: usize) -> PolyMatrix {
    let a = |ij: &str| format!("a{k}_{ij}");
    let (a12, a13, a23) = (a("12"), a("13"), a("23"));
    let rows: Vec<Vec<String>> = vec![
        vec!["0".into(), a12.clone(), a13.clone()],
        vec![format!("-{a12}"), "0".into(), a23.clone()],
        vec![format!("-{a13}"), format!("-{a23}"), "0".into()],
    ];
    parse_rows(ring, &rows)
}

fn symmetric(ring: &Ring, k: usize) -> PolyMatrix {
    let b = |i: usize, j: usize| {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        format!("b{k}_{i}{j}")
    };
    let rows: Vec<Vec<String>> = (1..=3).map(|i| (1..=3).map(|j| b(i, j)).collect()).collect();
    parse_rows(ring, &rows)
}

fn parse_rows(ring: &Ring, rows: &[Vec<String>]) -> PolyMatrix {
    let refs: Vec<Vec<&str>> = rows.iter().map(|r| r.iter().map(|s| s.as_str()).collect()).collect();
    let slices: Vec<&[&str]> = refs.iter().map(|r| r.as_slice()).collect();
    PolyMatrix::parse(ring, &slices).expect("literal matrix")
}

/// The substitution images of the 26 F22 coordinates, over the ring of `p23_ring`.
pub fn papadakis_images() -> Vec<(String, LaurentPolynomial)> {
    let ring = p23_ring();
    let lp = |p: &Polynomial| LaurentPolynomial::from_polynomial(p, "r").expect("r present");
    let rpow = |k: i32, c: Rational| LaurentPolynomial::r_power(&ring, "r", k, c).expect("r present");
    let x = PolyVector::from_vars(&ring, &["X1", "X2", "X3"]).unwrap();
    let y = PolyVector::from_vars(&ring, &["Y1", "Y2", "Y3"]).unwrap();
    let (a1, a2) = (skew(&ring, 1), skew(&ring, 2));
    let (b1, b2) = (symmetric(&ring, 1), symmetric(&ring, 2));
    let avec = |a: &PolyMatrix| PolyVector::from_vec(vec![a.get(1, 2).clone(), -a.get(0, 2), a.get(0, 1).clone()]);
    let (v1, v2) = (avec(&a1), avec(&a2));
    let det_with = |row: &PolyVector| {
        let m = PolyMatrix::from_rows(&ring, vec![row.entries().to_vec(), v1.entries().to_vec(), v2.entries().to_vec()])
            .unwrap();
        det(&m).unwrap()
    };
    let (dx, dy) = (det_with(&x), det_with(&y));
    // ᵗa_k = (−a23, a13, −a12) = −(the row used in D_X)
    let (t1, t2) = (v1.scale(&Rational::from(-1)), v2.scale(&Rational::from(-1)));
    let cross_term = |v: &PolyVector| &t1.dot(&b2.mul_vec(v)) - &t2.dot(&b1.mul_vec(v));
    let (cy, cx) = (cross_term(&y), cross_term(&x));
    let s0 = Polynomial::v(&ring, "s0");
    let s1 = Polynomial::v(&ring, "s1");

    let r1 = rpow(1, Rational::one());
    let half_inv = rpow(-1, qf(1, 2));
    let mut out: Vec<(String, LaurentPolynomial)> = Vec::new();
    for i in 0..3 {
        out.push((format!("x{}", i + 1), &(&r1 * &lp(&x[i])) + &lp(&y[i])));
    }
    for i in 0..3 {
        out.push((format!("y{}", i + 1), &(&r1 * &lp(&x[i])).scale(&Rational::from(-1)) + &lp(&y[i])));
    }
    for (name, a, b) in [("p", &a1, &b1), ("q", &a2, &b2)] {
        for i in 0..3 {
            for j in 0..3 {
                let e = &(&half_inv * &lp(a.get(i, j))) + &lp(b.get(i, j));
                out.push((format!("{name}{}{}", i + 1, j + 1), e));
            }
        }
    }
    let common = &(&rpow(-2, qf(1, 4)) * &lp(&dy)) - &(&lp(&s1) + &lp(&cx).scale(&qf(1, 2)));
    let odd = &(&(&r1 * &lp(&s0)) + &(&rpow(-1, qf(3, 4)) * &lp(&dx))) - &(&half_inv * &lp(&cy));
    out.push(("s".into(), &common - &odd));
    out.push(("t".into(), &common + &odd));
    out
}

/// The nine F22 equations rewritten in the Papadakis coordinates with `z = r²`.
pub fn papadakis_transform() -> Result<LaurentSystem, VarietyError> {
    let template = f22_template();
    let images = papadakis_images();
    let map: Vec<(&str, LaurentPolynomial)> = images.iter().map(|(n, l)| (n.as_str(), l.clone())).collect();
    let f22r = template.ring().extend(&["r"])?;
    let mut equations = Vec::new();
    for (label, f) in template.equations() {
        let lf = LaurentPolynomial::from_polynomial(&f.embed(&f22r)?, "r")?;
        equations.push((label.clone(), laurent_substitute(&lf, &map)?));
    }
    Ok(LaurentSystem { name: "P23_transform".into(), ring: p23_ring(), r: "r".into(), equations })
}

/// Each transformed equation multiplied by the power of `r` that makes it a
/// polynomial with nonzero constant term in `r`.
pub fn papadakis_cleared() -> Result<EquationSystem, VarietyError> {
    let ls = papadakis_transform()?;
    let ring = ls.ring.clone();
    let mut eqs = Vec::new();
    for (l, f) in &ls.equations {
        let shift = f.r_exponent_range().map(|(lo, _)| -lo).unwrap_or(0);
        let g = &LaurentPolynomial::r_power(&ring, "r", shift, Rational::one())? * f;
        eqs.push((l.clone(), g.to_polynomial().expect("nonnegative exponents")));
    }
    Ok(EquationSystem::new("P23_transform", &ring, eqs)?)
}

/// How `r ↦ −r` acts on the transformed equations: for each equation, the label
/// and sign of the equation it becomes, when it becomes one.
pub fn r_involution(ls: &LaurentSystem) -> Result<Vec<(String, Option<(String, i32)>)>, VarietyError> {
    let ring = &ls.ring;
    let minus_r = LaurentPolynomial::r_power(ring, &ls.r, 1, Rational::from(-1))?;
    let mut out = Vec::new();
    for (l, f) in &ls.equations {
        let g = laurent_substitute(f, &[(ls.r.as_str(), minus_r.clone())])?;
        let mut hit = None;
        for (m, h) in &ls.equations {
            if &g == h {
                hit = Some((m.clone(), 1));
                break;
            }
            if g == h.scale(&Rational::from(-1)) {
                hit = Some((m.clone(), -1));
                break;
            }
        }
        out.push((l.clone(), hit));
    }
    Ok(out)
}
