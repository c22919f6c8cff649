use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use exact_arith::{Polynomial, Rational, Ring};
use fts_core::{build_fts, parametric_pair, point_names, streg_equations, EquationSystem};
use poly_linalg::{det, wedge2, PolyMatrix, PolyVector};

use crate::dictionary::{matrix_entries, pairs, vector_entries, CoordinateDictionary};
use crate::papadakis::papadakis_cleared;
use crate::VarietyError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarietyId {
    F22,
    U14,
    S8,
    S8Raw,
    Z12,
    CL10,
    CL10Alt,
    CL9A4,
    CL8A3A4,
    CL8A1A4T8,
    CL8A1A3,
    B6,
    P23Transform,
}

impl VarietyId {
    pub const ALL: [VarietyId; 13] = [
        VarietyId::F22,
        VarietyId::U14,
        VarietyId::S8,
        VarietyId::S8Raw,
        VarietyId::Z12,
        VarietyId::CL10,
        VarietyId::CL10Alt,
        VarietyId::CL9A4,
        VarietyId::CL8A3A4,
        VarietyId::CL8A1A4T8,
        VarietyId::CL8A1A3,
        VarietyId::B6,
        VarietyId::P23Transform,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            VarietyId::F22 => "F22",
            VarietyId::U14 => "U14",
            VarietyId::S8 => "S8",
            VarietyId::S8Raw => "S8_raw",
            VarietyId::Z12 => "Z12",
            VarietyId::CL10 => "CL10",
            VarietyId::CL10Alt => "CL10_alt",
            VarietyId::CL9A4 => "CL9_A4",
            VarietyId::CL8A3A4 => "CL8_A3A4",
            VarietyId::CL8A1A4T8 => "CL8_A1A4_T8",
            VarietyId::CL8A1A3 => "CL8_A1A3",
            VarietyId::B6 => "B6",
            VarietyId::P23Transform => "P23_transform",
        }
    }
}

impl fmt::Display for VarietyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VarietyId {
    type Err = VarietyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        VarietyId::ALL
            .iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| VarietyError::UnknownId(s.to_string()))
    }
}

pub const CL_VARS: [&str; 14] =
    ["th1", "th2", "th3", "th4", "th23", "th41", "A1", "A2", "A3", "A4", "A23", "A41", "l13", "l24"];
pub const U14_PARAMS: [&str; 10] = ["a11", "a12", "a21", "b11", "b12", "b21", "c11", "c12", "c21", "c22"];

fn with_point(params: &[&str]) -> Ring {
    let mut names: Vec<String> = point_names("").to_vec();
    names.extend(params.iter().map(|s| s.to_string()));
    Ring::new(&names).expect("distinct names")
}

pub fn f22_ring() -> Ring {
    let pq: Vec<String> = ["p", "q"]
        .iter()
        .flat_map(|m| (1..=3).flat_map(move |i| (1..=3).map(move |j| format!("{m}{i}{j}"))))
        .collect();
    let pq: Vec<&str> = pq.iter().map(|s| s.as_str()).collect();
    with_point(&pq)
}

pub fn u14_ring() -> Ring {
    with_point(&U14_PARAMS)
}

pub fn s8_raw_ring() -> Ring {
    with_point(&["d0", "d1", "d2", "d3"])
}

pub fn s8_ring() -> Ring {
    Ring::of(&["u1", "u2", "u3", "u4", "v0", "v1", "v2", "v3", "d0", "d1", "d2", "d3"])
}

pub fn z12_ring() -> Ring {
    with_point(&["q12", "q13", "q21", "q22", "q23", "q31", "q32", "q33"])
}

pub fn cl10_ring() -> Ring {
    Ring::of(&CL_VARS)
}

pub fn t8_ring() -> Ring {
    Ring::of(&["w1", "w2", "z1", "z2", "z3", "s", "t", "u", "f0", "f1", "f2", "f3"])
}

/// The cluster ring with the listed coordinates removed.
pub fn cl_ring_without(fixed: &[&str]) -> Ring {
    let names: Vec<&str> = CL_VARS.iter().copied().filter(|v| !fixed.contains(v)).collect();
    Ring::of(&names)
}

/// The nine equations over `s, t, x, y` and the 18 entries of `P, Q`.
pub fn f22_template() -> &'static EquationSystem {
    static T: OnceLock<EquationSystem> = OnceLock::new();
    T.get_or_init(|| {
        let (p, q) = parametric_pair();
        let sys = build_fts(&p, &q).expect("parametric pair is nondegenerate");
        let eqs = streg_equations(&sys, None).expect("equations");
        let ring = f22_ring();
        eqs.map("F22", &ring, |f| f.embed(&ring).expect("same variables")).expect("same labels")
    })
}

fn pq_entries(p: [[&str; 3]; 3], q: [[&str; 3]; 3]) -> Vec<(String, String)> {
    let mut e = matrix_entries("p", p);
    e.extend(matrix_entries("q", q));
    e
}

/// F22 coordinates in the A, B, C notation.
pub fn u14_dictionary() -> CoordinateDictionary {
    let e = pq_entries(
        [["a11", "b11", "1"], ["a12", "b12", "0"], ["c11", "c12", "0"]],
        [["a21", "b21", "0"], ["-a11", "-b11", "1"], ["c21", "c22", "0"]],
    );
    CoordinateDictionary::new("U14", &u14_ring(), &f22_ring(), &e).expect("valid")
}

/// F22 coordinates with the d-notation for the specialized matrices.
pub fn s8_raw_dictionary() -> CoordinateDictionary {
    let e = pq_entries(
        [["d2", "d1", "1"], ["d1", "d0", "0"], ["1", "0", "0"]],
        [["-d3", "-d2", "0"], ["-d2", "-d1", "1"], ["0", "1", "0"]],
    );
    CoordinateDictionary::new("S8_raw", &s8_raw_ring(), &f22_ring(), &e).expect("valid")
}

/// S8 (U, V, D) coordinates written in the x, y, s, t of `S8_raw`.
pub fn s8_renaming() -> CoordinateDictionary {
    let e = pairs(&[
        ("u1", "y1"),
        ("u2", "-x1"),
        ("u3", "y2"),
        ("u4", "-x2"),
        ("v0", "t"),
        ("v1", "x3"),
        ("v2", "y3"),
        ("v3", "s"),
    ]);
    CoordinateDictionary::new("UVD", &s8_raw_ring(), &s8_ring(), &e).expect("valid")
}

pub fn z12_dictionary() -> CoordinateDictionary {
    let e = pq_entries(
        [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        [["-q22 - q33", "q12", "q13"], ["q21", "q22", "q23"], ["q31", "q32", "q33"]],
    );
    CoordinateDictionary::new("Z12", &z12_ring(), &f22_ring(), &e).expect("valid")
}

/// The cluster coordinates placed in the F22 template.
pub fn cl10_dictionary() -> CoordinateDictionary {
    let mut e = vector_entries("x", ["th4", "th1", "A23"]);
    e.extend(vector_entries("y", ["A41", "th2", "th3"]));
    e.extend(pq_entries(
        [["-A4", "0", "0"], ["0", "0", "1"], ["-l24", "-A2", "0"]],
        [["0", "1", "0"], ["-A1", "0", "0"], ["-l13", "0", "-A3"]],
    ));
    e.extend(pairs(&[("s", "-th23"), ("t", "-th41")]));
    CoordinateDictionary::new("CL10", &cl10_ring(), &f22_ring(), &e).expect("valid")
}

/// The cluster coordinates placed in the U14 format.
pub fn cl10_alt_dictionary() -> CoordinateDictionary {
    let mut e = vector_entries("x", ["th1 - A2*A23", "th4 - A3*A23", "A23"]);
    e.extend(vector_entries("y", ["A41", "1/2*th3 - 1/2*th2", "1/2*th3 + 1/2*th2"]));
    e.extend(pairs(&[
        ("s", "th23"),
        ("t", "2*th41"),
        ("a11", "0"),
        ("b11", "1"),
        ("a12", "-A4"),
        ("b12", "0"),
        ("c11", "-l24 - A3*A4"),
        ("c12", "2*A2"),
        ("a21", "-A1"),
        ("b21", "0"),
        ("c21", "-l13 - A1*A2"),
        ("c22", "-2*A3"),
    ]));
    CoordinateDictionary::new("CL10_alt", &cl10_ring(), &u14_ring(), &e).expect("valid")
}

/// U14 coordinates for the cluster variety with `A4 = -1`; with `a1_fixed` the
/// further specialization `A1 = -1` used for the A1A4 case.
pub fn cl9_dictionary(a1_fixed: bool) -> CoordinateDictionary {
    let fixed: &[&str] = if a1_fixed { &["A1", "A4"] } else { &["A4"] };
    let ring = cl_ring_without(fixed);
    let a1 = if a1_fixed { "-1" } else { "A1" };
    let mut e = vector_entries("x", ["A41", "th2", "th3"]);
    e.extend(vector_entries("y", ["A23", "th1", "th4 - 1/2*l24*A23"]));
    let b21 = format!("-({a1})");
    e.extend(pairs(&[
        ("s", "-th41"),
        ("t", "th23"),
        ("a11", "-1/2*l24"),
        ("b11", "0"),
        ("a12", "-A2"),
        ("b12", "0"),
        ("c11", "0"),
        ("c12", "1"),
        ("a21", "-l13"),
        ("b21", &b21),
        ("c21", "-A3"),
        ("c22", "0"),
    ]));
    let name = if a1_fixed { "CL8_A1A4" } else { "CL9_A4" };
    CoordinateDictionary::new(name, &ring, &u14_ring(), &e).expect("valid")
}

/// S8_raw coordinates for the cluster variety with `A3 = A4 = -1`.
pub fn cl8_a3a4_dictionary() -> CoordinateDictionary {
    let ring = cl_ring_without(&["A3", "A4"]);
    let mut e = vector_entries("x", ["A41", "th2", "th3 - 2/3*l13*A41 + 1/3*l24*th2"]);
    e.extend(vector_entries("y", ["th1", "A23", "th4 + 1/3*l13*th1 - 2/3*l24*A23"]));
    e.extend(pairs(&[
        ("s", "-th41"),
        ("t", "-th23"),
        ("d0", "-A2"),
        ("d1", "-1/3*l24"),
        ("d2", "1/3*l13"),
        ("d3", "A1"),
    ]));
    CoordinateDictionary::new("CL8_A3A4", &ring, &s8_raw_ring(), &e).expect("valid")
}

/// T8 coordinates for the cluster variety with `A1 = A4 = -1`.
pub fn t8_dictionary() -> CoordinateDictionary {
    let ring = cl_ring_without(&["A1", "A4"]);
    let e = pairs(&[
        ("w1", "th1 - 1/3*l13*A23"),
        ("w2", "-th4 + 1/3*l24*A23"),
        ("z1", "A41"),
        ("z2", "th2"),
        ("z3", "th3"),
        ("f0", "-A3"),
        ("f1", "1/3*l13"),
        ("f2", "1/3*l24"),
        ("f3", "-A2"),
        ("s", "-th41"),
        ("t", "th23"),
        ("u", "A23"),
    ]);
    CoordinateDictionary::new("T8", &ring, &t8_ring(), &e).expect("valid")
}

/// Z12 coordinates for the cluster variety with `A1 = A3 = -1`.
pub fn cl8_a1a3_dictionary() -> CoordinateDictionary {
    let ring = cl_ring_without(&["A1", "A3"]);
    let mut e = vector_entries("x", ["th4", "th1", "A23"]);
    e.extend(vector_entries("y", ["th2", "A41", "th3 - l13*A41"]));
    e.extend(pairs(&[
        ("s", "th23"),
        ("t", "-th41"),
        ("q12", "-A4"),
        ("q13", "0"),
        ("q21", "0"),
        ("q22", "2/3*l13"),
        ("q23", "1"),
        ("q31", "-A2"),
        ("q32", "-l24"),
        ("q33", "-1/3*l13"),
    ]));
    CoordinateDictionary::new("CL8_A1A3", &ring, &z12_ring(), &e).expect("valid")
}

/// Sets the listed cluster coordinates to `-1`.
pub fn cl_specialization(fixed: &[&str]) -> CoordinateDictionary {
    let ring = cl_ring_without(fixed);
    let e: Vec<(String, String)> = fixed.iter().map(|v| (v.to_string(), "-1".to_string())).collect();
    CoordinateDictionary::new("fix", &ring, &cl10_ring(), &e).expect("valid")
}

pub(crate) fn hat(m: &PolyMatrix) -> PolyMatrix {
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let two = Rational::from(2);
    let rows = vec![
        vec![a * a, a * b, b * b],
        vec![(a * c).scale(&two), &(a * d) + &(b * c), (b * d).scale(&two)],
        vec![c * c, c * d, d * d],
    ];
    PolyMatrix::from_rows(m.ring(), rows).expect("3x3")
}

pub(crate) fn hat_dagger(m: &PolyMatrix) -> PolyMatrix {
    let (u1, u2, u3, u4) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    let two = Rational::from(-2);
    let rows = vec![
        vec![u4 * u4, -(u2 * u4), u2 * u2],
        vec![(u3 * u4).scale(&two), &(u1 * u4) + &(u2 * u3), (u1 * u2).scale(&two)],
        vec![u3 * u3, -(u1 * u3), u1 * u1],
    ];
    PolyMatrix::from_rows(m.ring(), rows).expect("3x3")
}

/// The U, V, D matrices of the S8 presentation over `ring`.
pub(crate) fn s8_matrices(ring: &Ring) -> (PolyMatrix, PolyMatrix, PolyMatrix) {
    let u = PolyMatrix::parse(ring, &[&["u1", "u2"], &["u3", "u4"]]).expect("u");
    let v = PolyMatrix::parse(ring, &[&["v2", "v1", "v0"], &["-v3", "-v2", "-v1"]]).expect("v");
    let d = PolyMatrix::parse(ring, &[&["d2", "d1", "d0"], &["-d3", "-d2", "-d1"]]).expect("d");
    (u, v, d)
}

/// `UV − DÛ` and `∧²V − (∧²D)ᵗÛ†` for given matrices.
pub(crate) fn s8_equations_of(u: &PolyMatrix, v: &PolyMatrix, d: &PolyMatrix) -> Vec<(String, Polynomial)> {
    let lhs = u.mul(v).expect("2x3");
    let rhs = d.mul(&hat(u)).expect("2x3");
    let mut eqs = Vec::new();
    for i in 0..2 {
        for j in 0..3 {
            eqs.push((format!("UV{}{}", i + 1, j + 1), lhs.get(i, j) - rhs.get(i, j)));
        }
    }
    let wv = wedge2(v).expect("2x3");
    let wd = hat_dagger(u).mul_vec(&wedge2(d).expect("2x3"));
    for k in 0..3 {
        eqs.push((format!("W{}", k + 1), &wv[k] - &wd[k]));
    }
    eqs
}

pub fn s8_system() -> EquationSystem {
    let ring = s8_ring();
    let (u, v, d) = s8_matrices(&ring);
    EquationSystem::new("S8", &ring, s8_equations_of(&u, &v, &d)).expect("labels")
}

fn t8_system() -> EquationSystem {
    let r = t8_ring();
    let p = |s: &str| Polynomial::parse(&r, s).expect("literal");
    let w = PolyVector::parse(&r, &["w1", "w2"]).expect("w");
    let zm = PolyMatrix::parse(&r, &[&["z1", "-z2"], &["z3", "-z1"]]).expect("Z");
    let z = PolyVector::parse(&r, &["z2", "-2*z1", "z3"]).expect("z");
    let f = PolyMatrix::parse(&r, &[&["f2", "f1", "f0"], &["f3", "f2", "f1"]]).expect("F");
    let fd = PolyMatrix::parse(&r, &[&["-f1", "f0"], &["2*f2", "-2*f1"], &["-f3", "f2"]]).expect("F†");
    let (s, t, u) = (p("s"), p("t"), p("u"));
    let fz = f.mul_vec(&z);
    let mut eqs = Vec::new();
    let zw = zm.mul_vec(&w);
    for i in 0..2 {
        eqs.push((format!("Zw{}", i + 1), &zw[i] + &(&u * &fz[i])));
    }
    let zfz = zm.mul_vec(&fz);
    for i in 0..2 {
        eqs.push((format!("tw{}", i + 1), &(&t * &w[i]) - &zfz[i]));
    }
    eqs.push(("tu".into(), &(&t * &u) - &det(&zm).expect("2x2")));
    let wf = wedge2(&f.transpose()).expect("3x2");
    let fdw = fd.mul_vec(&w);
    let quad = [p("w1^2"), p("-2*w1*w2"), p("w2^2")];
    let u2 = u.pow(2).scale_i(-2);
    for i in 0..3 {
        let rhs = &(&(&u2 * &wf[i]) + &(&u * &fdw[i])) + &quad[i];
        eqs.push((format!("sz{}", i + 1), &(&s * &z[i]) - &rhs));
    }
    let wfd = wedge2(&fd).expect("3x2");
    let st_rhs = &(&u * &wfd.dot(&z)).scale(&Rational::frac(-1, 2)) + &PolyVector::parse(&r, &["w2", "-w1"]).unwrap().dot(&fz);
    eqs.push(("st".into(), &(&s * &t) - &st_rhs));
    EquationSystem::new("CL8_A1A4_T8", &r, eqs).expect("labels")
}

/// The dictionary taking an id's ring into the F22 template, for the ids that
/// are obtained by substitution alone.
pub fn template_dictionary(id: VarietyId) -> Option<CoordinateDictionary> {
    let d = match id {
        VarietyId::F22 => CoordinateDictionary::identity(&f22_ring()),
        VarietyId::U14 => u14_dictionary(),
        VarietyId::S8Raw => s8_raw_dictionary(),
        VarietyId::Z12 => z12_dictionary(),
        VarietyId::CL10 => cl10_dictionary(),
        VarietyId::CL10Alt => u14_dictionary().then(&cl10_alt_dictionary()).ok()?,
        VarietyId::CL9A4 => cl10_dictionary().then(&cl_specialization(&["A4"])).ok()?,
        VarietyId::CL8A3A4 => cl10_dictionary().then(&cl_specialization(&["A3", "A4"])).ok()?,
        VarietyId::CL8A1A3 => cl10_dictionary().then(&cl_specialization(&["A1", "A3"])).ok()?,
        _ => return None,
    };
    Some(d)
}

pub fn generate(id: VarietyId) -> Result<EquationSystem, VarietyError> {
    match id {
        VarietyId::S8 => Ok(s8_system()),
        VarietyId::B6 => {
            let s8 = s8_system();
            let ring = Ring::of(&["u1", "u2", "u3", "u4", "v0", "v1", "v2", "v3", "d0", "d1"]);
            let d = CoordinateDictionary::new("B6", &ring, s8.ring(), &pairs(&[("d2", "0"), ("d3", "-1")]))?;
            d.apply_system(&s8, "B6")
        }
        VarietyId::CL8A1A4T8 => Ok(t8_system()),
        VarietyId::P23Transform => papadakis_cleared(),
        _ => {
            let d = template_dictionary(id).expect("dictionary-based id");
            d.apply_system(f22_template(), id.as_str())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in VarietyId::ALL {
            assert_eq!(id.as_str().parse::<VarietyId>().unwrap(), id);
        }
        assert!("F23".parse::<VarietyId>().is_err());
    }

    #[test]
    fn hat_is_multiplicative() {
        let r = Ring::of(&["a", "b", "c", "d", "e", "f", "g", "h"]);
        let m = PolyMatrix::parse(&r, &[&["a", "b"], &["c", "d"]]).unwrap();
        let n = PolyMatrix::parse(&r, &[&["e", "f"], &["g", "h"]]).unwrap();
        assert_eq!(hat(&m.mul(&n).unwrap()), hat(&m).mul(&hat(&n)).unwrap());
    }

    #[test]
    fn s8_shape() {
        let s = s8_system();
        assert_eq!(s.len(), 9);
        assert!(s.polynomials().iter().all(|p| p.total_degree() == Some(3) || p.total_degree() == Some(4)));
    }
}
