use std::fmt;

use exact_arith::{Polynomial, Rational, Ring};
use fts_core::{build_fts, CheckRecord, EquationSystem, Report};
use poly_linalg::{wedge2, DegreeBound, PolyMatrix};
use serde::Serialize;
use serde_json::json;

use crate::dictionary::{pairs, CoordinateDictionary};
use crate::equivalence::verify_presentation_equivalence;
use crate::generate::{generate, s8_matrices, s8_system, VarietyId};
use crate::VarietyError;

/// Type of a fiber of the projection of S8 to the D-coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FiberClass {
    Origin,
    P111,
    P1xQ,
    P1P1P1,
}

impl fmt::Display for FiberClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FiberClass::Origin => "origin",
            FiberClass::P111 => "P111",
            FiberClass::P1xQ => "P1xQ",
            FiberClass::P1P1P1 => "P1P1P1",
        })
    }
}

const QUARTIC: &str = "3*d1^2*d2^2 - 4*d1^3*d3 - 4*d0*d2^3 + 6*d0*d1*d2*d3 - d0^2*d3^2";
const UV: [&str; 8] = ["u1", "u2", "u3", "u4", "v0", "v1", "v2", "v3"];

/// The quartic of the tangential scroll of the twisted cubic, over any ring
/// containing `d0..d3`.
pub fn tangential_quartic(ring: &Ring) -> Result<Polynomial, VarietyError> {
    Ok(Polynomial::parse(ring, QUARTIC)?)
}

fn uv_ring() -> Ring {
    Ring::of(&UV)
}

/// The fiber over `d = (d0, d1, d2, d3)` and its type.
pub fn s8_fiber(d: &[Rational; 4]) -> Result<(EquationSystem, FiberClass), VarietyError> {
    let s8 = s8_system();
    let entries: Vec<(String, String)> = (0..4).map(|i| (format!("d{i}"), d[i].to_string())).collect();
    let dict = CoordinateDictionary::new("fiber", &uv_ring(), s8.ring(), &entries)?;
    let sys = dict.apply_system(&s8, "S8_fiber")?;

    let dr = Ring::of(&["d0", "d1", "d2", "d3"]);
    let values: Vec<Rational> = d.to_vec();
    let dm = PolyMatrix::parse(&dr, &[&["d2", "d1", "d0"], &["-d3", "-d2", "-d1"]])?;
    let class = if d.iter().all(|c| c.is_zero()) {
        FiberClass::Origin
    } else if wedge2(&dm)?.iter().all(|m| m.eval(&values).is_zero()) {
        FiberClass::P111
    } else if tangential_quartic(&dr)?.eval(&values).is_zero() {
        FiberClass::P1xQ
    } else {
        FiberClass::P1P1P1
    };
    Ok((sys, class))
}

fn minors(ring: &Ring, rows: [[&str; 4]; 2]) -> Result<Vec<Polynomial>, VarietyError> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in (i + 1)..4 {
            let f = format!("({})*({}) - ({})*({})", rows[0][i], rows[1][j], rows[0][j], rows[1][i]);
            out.push(Polynomial::parse(ring, &f)?);
        }
    }
    Ok(out)
}

/// The displayed equations of the fiber at the origin, the d0-point and the d1-point.
pub fn s8_fiber_template(class: FiberClass) -> Result<Option<EquationSystem>, VarietyError> {
    let r = uv_ring();
    let polys = match class {
        FiberClass::Origin => {
            let (u, v, _) = s8_matrices(&r.extend(&["d0", "d1", "d2", "d3"])?);
            let uv = u.mul(&v)?;
            let mut out: Vec<Polynomial> = uv.entries().to_vec();
            out.extend(wedge2(&v)?.into_entries());
            out.iter().map(|p| p.embed_partial(&r)).collect::<Result<_, _>>()?
        }
        FiberClass::P111 => {
            let mut out = minors(&r, [["u3", "v3", "v2", "v1"], ["u4", "v2", "v1", "v0"]])?;
            for f in ["u1*v2 - u2*v3 - u3^2", "u1*v1 - u2*v2 - u3*u4", "u1*v0 - u2*v1 - u4^2"] {
                out.push(Polynomial::parse(&r, f)?);
            }
            out
        }
        FiberClass::P1xQ => {
            let x = [["u1", "v1 + 2*u4", "v3", "v2 + u3"], ["u2", "v0", "v2 - 2*u3", "v1 - u4"]];
            let mut out = minors(&r, x)?;
            let sq = |a: &str, b: &str, c: &str, d: &str| format!("({a})*({b}) - ({c})*({d})");
            for f in [
                sq(x[0][3], x[0][3], x[0][1], x[0][2]),
                sq(x[1][3], x[1][3], x[1][1], x[1][2]),
                sq(x[0][3], x[1][3], x[0][2], x[1][1]),
            ] {
                out.push(Polynomial::parse(&r, &f)?);
            }
            out
        }
        FiberClass::P1P1P1 => return Ok(None),
    };
    Ok(Some(EquationSystem::unlabelled(&format!("template_{class}"), &r, polys)?))
}

/// Fiber type and template equivalence at the origin, the d0-point and the d1-point.
pub fn s8_fiber_check(bound: u32) -> Result<Report, VarietyError> {
    let points = [
        ("origin", [0, 0, 0, 0], FiberClass::Origin),
        ("d0_point", [1, 0, 0, 0], FiberClass::P111),
        ("d1_point", [0, 1, 0, 0], FiberClass::P1xQ),
    ];
    let mut report = Report::default();
    for (name, d, expected) in points {
        let d = d.map(Rational::from);
        let (sys, class) = s8_fiber(&d)?;
        let template = s8_fiber_template(expected)?.expect("template");
        let e = verify_presentation_equivalence(
            &format!("s8_fiber.{name}"),
            &sys.without_zeros(),
            &template,
            &CoordinateDictionary::identity(&uv_ring()),
            &DegreeBound::total(bound),
        )?;
        let mut rec = e.to_record();
        if class != expected {
            rec.status = fts_core::Status::Fail;
        }
        let mut details = rec.details.take().unwrap_or_else(|| json!({}));
        details["class"] = json!(class.to_string());
        report.push(rec.with_details(details));
    }
    Ok(report)
}

/// `Dbeta = constant · quartic · cofactor` for the S8 pair, with `cofactor = 1`
/// when the two are proportional.
#[derive(Clone, Debug, PartialEq)]
pub struct ScrollRelation {
    pub constant: Rational,
    pub cofactor: Polynomial,
    pub dbeta: Polynomial,
    pub quartic: Polynomial,
}

impl ScrollRelation {
    pub fn proportional(&self) -> bool {
        self.cofactor.constant_value().map(|c| c.is_one()).unwrap_or(false)
    }
}

/// Divides the discriminant of β for the S8 pair by the tangential quartic.
pub fn tangential_scroll_check() -> Result<ScrollRelation, VarietyError> {
    let r = Ring::of(&["d0", "d1", "d2", "d3"]);
    let p = PolyMatrix::parse(&r, &[&["d2", "d1", "1"], &["d1", "d0", "0"], &["1", "0", "0"]])?;
    let q = PolyMatrix::parse(&r, &[&["-d3", "-d2", "0"], &["-d2", "-d1", "1"], &["0", "1", "0"]])?;
    let sys = build_fts(&p, &q)?;
    let dbeta = sys.dbeta().clone();
    let quartic = tangential_quartic(&r)?;
    let quotient = match dbeta.exact_divide(&quartic) {
        Ok(q) => q,
        Err(_) => {
            quartic.exact_divide(&dbeta).map_err(|_| VarietyError::NotProportional)?;
            return Err(VarietyError::NotProportional);
        }
    };
    let lc = quotient.leading_term().map(|t| t.1.clone()).ok_or(VarietyError::NotProportional)?;
    let cofactor = quotient.scale(&lc.recip()?);
    Ok(ScrollRelation { constant: lc, cofactor, dbeta, quartic })
}

/// Rewrites S8 at `d3 = −1` in the coordinates `D0, D1, U1, U2`.
///
/// `U1, U2` come from `U ↦ [[1, −d2], [0, 1]]·U`, so the first row of `UV − DÛ`
/// is replaced by the same row operation. `cubic_term` toggles the `2d2³` in
/// `D0`. Fails with `ResidualDependence` on the first equation still involving
/// `d2`.
pub fn b6_cone_rewrite(cubic_term: bool) -> Result<EquationSystem, VarietyError> {
    let s8 = s8_system();
    let target = Ring::of(&["U1", "U2", "u3", "u4", "v0", "v1", "v2", "v3", "D0", "D1", "d2"]);
    // inverse of the triangular change of coordinates
    let d0 = if cubic_term { "D0 - 3*D1*d2 + d2^3" } else { "D0 - 3*D1*d2 + 3*d2^3" };
    let dict = CoordinateDictionary::new(
        "B6_cone",
        &target,
        s8.ring(),
        &pairs(&[("u1", "U1 + d2*u3"), ("u2", "U2 + d2*u4"), ("d0", d0), ("d1", "D1 - d2^2"), ("d3", "-1")]),
    )?;
    let rewritten = dict.apply_system(&s8, "B6_rewritten")?;
    let d2 = target.require("d2")?;
    let d2p = Polynomial::v(&target, "d2");
    let mut eqs = Vec::new();
    for (label, f) in rewritten.equations() {
        let f = match label.strip_prefix("UV1") {
            Some(j) => f - &(&d2p * rewritten.get(&format!("UV2{j}")).expect("UV2j")),
            None => f.clone(),
        };
        if f.variables().contains(&d2) {
            return Err(VarietyError::ResidualDependence { var: "d2".into(), equation: label.clone() });
        }
        eqs.push((label.clone(), f));
    }
    Ok(EquationSystem::new("B6_cone", &target, eqs)?)
}

/// The d2-free rewrite, compared equation by equation with B6 renamed into
/// `U1, U2, D0, D1`.
pub fn b6_cone_check(cubic_term: bool) -> Result<Report, VarietyError> {
    let rewritten = b6_cone_rewrite(cubic_term)?;
    let target = rewritten.ring().clone();
    let b6 = generate(VarietyId::B6)?;
    let images: Vec<Polynomial> = b6
        .ring()
        .names()
        .iter()
        .map(|n| {
            let t = match n.as_str() {
                "u1" => "U1",
                "u2" => "U2",
                "d0" => "D0",
                "d1" => "D1",
                other => other,
            };
            Polynomial::v(&target, t)
        })
        .collect();
    let mut report = Report::default();
    for ((label, f), (_, g)) in rewritten.equations().iter().zip(b6.equations()) {
        let diff = f - &g.substitute(&target, &images);
        report.push(CheckRecord::from_residual(&format!("b6.{label}"), diff.nterms()));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_by_orbit() {
        let q = |v: [i64; 4]| v.map(Rational::from);
        assert_eq!(s8_fiber(&q([0, 0, 0, 0])).unwrap().1, FiberClass::Origin);
        assert_eq!(s8_fiber(&q([1, 0, 0, 0])).unwrap().1, FiberClass::P111);
        assert_eq!(s8_fiber(&q([0, 0, 0, 1])).unwrap().1, FiberClass::P111);
        assert_eq!(s8_fiber(&q([0, 1, 0, 0])).unwrap().1, FiberClass::P1xQ);
        assert_eq!(s8_fiber(&q([1, 0, 0, 1])).unwrap().1, FiberClass::P1P1P1);
    }
}
