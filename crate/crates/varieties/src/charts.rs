use std::fmt;
use std::str::FromStr;

use exact_arith::{Polynomial, Rational, Ring};
use fts_core::{CheckRecord, EquationSystem, Report, Status};
use poly_linalg::{pfaffians_4x4, rational_rank, DegreeBound, PolyMatrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::dictionary::CoordinateDictionary;
use crate::equivalence::{grading_without, verify_presentation_equivalence};
use crate::generate::{generate, u14_ring, VarietyId, U14_PARAMS};
use crate::VarietyError;

/// The seven affine charts of U14 covered by the checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    X1,
    X2,
    X3,
    Y1,
    Y2,
    S,
    T,
}

impl Chart {
    pub const ALL: [Chart; 7] = [Chart::X1, Chart::X2, Chart::S, Chart::T, Chart::X3, Chart::Y1, Chart::Y2];

    pub fn as_str(&self) -> &'static str {
        match self {
            Chart::X1 => "x1",
            Chart::X2 => "x2",
            Chart::X3 => "x3",
            Chart::Y1 => "y1",
            Chart::Y2 => "y2",
            Chart::S => "s",
            Chart::T => "t",
        }
    }

    pub fn is_graph(&self) -> bool {
        matches!(self, Chart::X1 | Chart::X2 | Chart::S | Chart::T)
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Chart {
    type Err = VarietyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Chart::ALL
            .iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .copied()
            .ok_or_else(|| VarietyError::UnknownId(format!("chart {s}")))
    }
}

const X1_SOLVED: [(&str, &str); 4] = [
    ("y3", "-a11*y1 - a12*x2*y1 - c11*x3*y1 - b11*y2 - b12*x2*y2 - c12*x3*y2"),
    (
        "s",
        "2*a11*c11*y1^2 + a12*c21*y1^2 + a12*c11*x2*y1^2 + c11^2*x3*y1^2 + 2*b11*c11*y1*y2 \
         + 2*a11*c12*y1*y2 + b12*c21*y1*y2 + a12*c22*y1*y2 + b12*c11*x2*y1*y2 + a12*c12*x2*y1*y2 \
         + 2*c11*c12*x3*y1*y2 + 2*b11*c12*y2^2 + b12*c22*y2^2 + b12*c12*x2*y2^2 + c12^2*x3*y2^2",
    ),
    ("b21", "2*b11*x2 + b12*x2^2 - c22*x3 + c12*x2*x3 - t*y1"),
    ("a21", "2*a11*x2 + a12*x2^2 - c21*x3 + c11*x2*x3 + t*y2"),
];

const X2_SOLVED: [(&str, &str); 4] = [
    ("y3", "a11*y1 - a21*x1*y1 - c21*x3*y1 + b11*y2 - b21*x1*y2 - c22*x3*y2"),
    (
        "s",
        "a21*c11*y1^2 - 2*a11*c21*y1^2 + a21*c21*x1*y1^2 + c21^2*x3*y1^2 + b21*c11*y1*y2 \
         + a21*c12*y1*y2 - 2*b11*c21*y1*y2 - 2*a11*c22*y1*y2 + b21*c21*x1*y1*y2 + a21*c22*x1*y1*y2 \
         + 2*c21*c22*x3*y1*y2 + b21*c12*y2^2 - 2*b11*c22*y2^2 + b21*c22*x1*y2^2 + c22^2*x3*y2^2",
    ),
    ("b12", "-2*b11*x1 + b21*x1^2 - c12*x3 + c22*x1*x3 + t*y1"),
    ("a12", "-2*a11*x1 + a21*x1^2 - c11*x3 + c21*x1*x3 - t*y2"),
];

const X3_MATRIX: [[&str; 5]; 5] = [
    ["0", "t", "a11*x1 + a12*x2 + c11", "b11*x1 + b12*x2 + c12", "x1"],
    ["", "0", "a21*x1 - a11*x2 + c21", "b21*x1 - b11*x2 + c22", "x2"],
    ["", "", "0", "y3", "-y2"],
    ["", "", "", "0", "y1"],
    ["", "", "", "", "0"],
];

const Y_MATRIX: [[&str; 5]; 5] = [
    ["0", "s", "a11*y1 + b11*y2 + y3", "a12*y1 + b12*y2", "c11*y1 + c12*y2"],
    ["", "0", "a21*y1 + b21*y2", "-a11*y1 - b11*y2 + y3", "c21*y1 + c22*y2"],
    ["", "", "0", "x3", "-x2"],
    ["", "", "", "0", "x1"],
    ["", "", "", "", "0"],
];

/// Skew matrix from its strict upper triangle.
fn skew_from_upper(ring: &Ring, upper: &[[&str; 5]; 5]) -> Result<PolyMatrix, VarietyError> {
    let mut m = PolyMatrix::zeros(ring, 5, 5);
    for i in 0..5 {
        for j in (i + 1)..5 {
            let p = Polynomial::parse(ring, upper[i][j])?;
            m.set(j, i, -&p);
            m.set(i, j, p);
        }
    }
    Ok(m)
}

/// `v · c − rest` solved for `v` at `c = 1`: the image of the eliminated variable.
fn solved_from(eq: &Polynomial, eliminated: &str, chart_var: &str) -> Result<Polynomial, VarietyError> {
    let ring = eq.ring();
    let one = Polynomial::one(ring);
    let at_one = eq.subs(&[(chart_var, one)])?;
    let img = &Polynomial::v(ring, eliminated) - &at_one;
    if img.variables().contains(&ring.require(eliminated)?) {
        return Err(VarietyError::ChartFailure { label: eliminated.into(), residual: img.to_text() });
    }
    Ok(img)
}

/// `x = y♯`, `t = β/3` at `s = 1`, and the mirror images for the t-chart.
fn sharp_chart_images(u14: &EquationSystem, chart: Chart) -> Result<Vec<(String, Polynomial)>, VarietyError> {
    let ring = u14.ring();
    let eq = |l: &str| u14.get(l).cloned().ok_or_else(|| VarietyError::Dictionary(format!("missing {l}")));
    let (this, other, own_block, other_block) = if chart == Chart::S { ("s", "t", "x", "sx") } else { ("t", "s", "y", "ty") };
    // `this·v_i − eq` is the sharp of the other vector
    let mut images = vec![(this.to_string(), Polynomial::one(ring))];
    let mut map: Vec<(String, Polynomial)> = Vec::new();
    for i in 1..=3 {
        let v = format!("{own_block}{i}");
        let e = eq(&format!("{other_block}{i}"))?;
        let sharp = &(&Polynomial::v(ring, this) * &Polynomial::v(ring, &v)) - &e;
        map.push((v, sharp));
    }
    let st = eq("st")?;
    let third_beta = &(&Polynomial::v(ring, "s") * &Polynomial::v(ring, "t")) - &st;
    let refs: Vec<(&str, Polynomial)> = map.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
    images.push((other.to_string(), third_beta.subs(&refs)?));
    images.extend(map);
    Ok(images)
}

fn substitute_all(sys: &EquationSystem, images: &[(String, Polynomial)]) -> Result<Vec<(String, Polynomial)>, VarietyError> {
    let refs: Vec<(&str, Polynomial)> = images.iter().map(|(n, p)| (n.as_str(), p.clone())).collect();
    sys.equations().iter().map(|(l, f)| Ok((l.clone(), f.subs(&refs)?))).collect()
}

fn graph_chart(chart: Chart) -> Result<Report, VarietyError> {
    let u14 = generate(VarietyId::U14)?;
    let ring = u14.ring().clone();
    let images: Vec<(String, Polynomial)> = match chart {
        Chart::X1 | Chart::X2 => {
            let (var, solved) = if chart == Chart::X1 { ("x1", &X1_SOLVED) } else { ("x2", &X2_SOLVED) };
            let mut v = vec![(var.to_string(), Polynomial::one(&ring))];
            for (n, t) in solved.iter() {
                v.push((n.to_string(), Polynomial::parse(&ring, t)?));
            }
            v
        }
        _ => sharp_chart_images(&u14, chart)?,
    };
    let out = substitute_all(&u14, &images)?;
    let mut report = Report::default();
    for (l, r) in out {
        report.push(CheckRecord::from_residual(format!("chart_{chart}.{l}"), r.nterms()));
    }
    Ok(report)
}

/// The ring of a Pfaffian chart: U14 without the chart variable and the eliminated one.
fn reduced_ring(drop: &[&str]) -> Ring {
    let ring = u14_ring();
    let names: Vec<&str> = ring.names().iter().map(|s| s.as_str()).filter(|n| !drop.contains(n)).collect();
    Ring::of(&names)
}

fn pfaffian_chart(chart: Chart, bound: Option<&DegreeBound>) -> Result<Report, VarietyError> {
    let u14 = generate(VarietyId::U14)?;
    let ring = u14.ring().clone();
    let (var, elim, eq_label, upper) = match chart {
        Chart::X3 => ("x3", "s", "sx3", &X3_MATRIX),
        Chart::Y1 => ("y1", "t", "ty1", &Y_MATRIX),
        Chart::Y2 => ("y2", "t", "ty2", &Y_MATRIX),
        _ => unreachable!("graph chart"),
    };
    let eq = u14.get(eq_label).expect("label");
    let elim_img = solved_from(eq, elim, var)?;
    let target = reduced_ring(&[var, elim]);
    let images: Vec<(String, String)> =
        vec![(var.to_string(), "1".to_string()), (elim.to_string(), elim_img.embed_partial(&target)?.to_text())];
    let dict = CoordinateDictionary::new(&format!("chart_{var}"), &target, &ring, &images)?;
    let restricted = dict.apply_system(&u14, &format!("U14|{var}=1"))?.without_zeros();
    let skew = skew_from_upper(&ring, upper)?;
    let pf: Vec<Polynomial> = pfaffians_4x4(&skew)?.iter().map(|p| dict.apply(p)).collect::<Result<_, _>>()?;
    let pf = EquationSystem::new(
        &format!("pfaffians_{var}"),
        &target,
        pf.into_iter().enumerate().map(|(i, p)| (format!("pf{}", i + 1), p)).collect(),
    )?;
    let default = DegreeBound::graded(4, grading_without(&target, &U14_PARAMS), 6);
    let bound = bound.unwrap_or(&default);
    let e = verify_presentation_equivalence(
        &format!("chart_{var}.pfaffians"),
        &restricted,
        &pf,
        &CoordinateDictionary::identity(&target),
        bound,
    )?;
    Ok(e.to_report())
}

/// Verifies one chart of U14. Graph charts produce one record per equation;
/// Pfaffian charts one membership record. `bound` only affects Pfaffian charts.
pub fn chart_check(chart: Chart, bound: Option<&DegreeBound>) -> Result<Report, VarietyError> {
    if chart.is_graph() {
        graph_chart(chart)
    } else {
        pfaffian_chart(chart, bound)
    }
}

/// Rank of the Jacobian of `sys` at a rational point covering all its variables.
pub fn jacobian_rank_at(sys: &EquationSystem, point: &[(String, Rational)]) -> Result<usize, VarietyError> {
    let ring = sys.ring();
    let mut values = vec![None; ring.nvars()];
    for (n, v) in point {
        values[ring.require(n)?] = Some(v.clone());
    }
    let values: Vec<Rational> = values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| VarietyError::Dictionary(format!("point misses {}", ring.name(i)))))
        .collect::<Result<_, _>>()?;
    let rows: Vec<Vec<Rational>> = sys
        .polynomials()
        .iter()
        .map(|f| (0..ring.nvars()).map(|i| f.derivative(i).eval(&values)).collect())
        .collect();
    Ok(rational_rank(&rows))
}

fn small(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from(rng.gen_range(-4i64..=4))
}

fn params_point(rng: &mut ChaCha8Rng) -> Vec<(String, Rational)> {
    U14_PARAMS.iter().map(|p| (p.to_string(), small(rng))).collect()
}

fn evaluate_at(p: &Polynomial, point: &[(String, Rational)]) -> Result<Rational, VarietyError> {
    let m: Vec<(&str, Rational)> = point.iter().map(|(n, v)| (n.as_str(), v.clone())).collect();
    let q = p.subs_values(&m)?;
    q.constant_value().ok_or_else(|| VarietyError::Dictionary(format!("not constant: {q}")))
}

/// Seeded points of the s-chart graph `s = 1, x = y♯, t = β/3` of U14.
pub fn s_chart_points(seed: u64, n: usize) -> Result<Vec<Vec<(String, Rational)>>, VarietyError> {
    let u14 = generate(VarietyId::U14)?;
    let images = sharp_chart_images(&u14, Chart::S)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for _ in 0..n {
        let mut base = params_point(&mut rng);
        for v in ["y1", "y2", "y3"] {
            base.push((v.to_string(), small(&mut rng)));
        }
        let mut pt = base.clone();
        for (v, img) in &images {
            pt.push((v.clone(), evaluate_at(img, &base)?));
        }
        out.push(pt);
    }
    Ok(out)
}

/// Seeded points of the locus with `x = (0,0,1)`, `y = 0`, `s = t = 0`, `C = 0`
/// and random `A`, `B`.
pub fn singular_x_points(seed: u64, n: usize) -> Vec<Vec<(String, Rational)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let mut pt: Vec<(String, Rational)> = Vec::new();
            for p in U14_PARAMS {
                let v = if p.starts_with('c') { Rational::zero() } else { small(&mut rng) };
                pt.push((p.to_string(), v));
            }
            for (v, c) in [("x1", 0), ("x2", 0), ("x3", 1), ("y1", 0), ("y2", 0), ("y3", 0), ("s", 0), ("t", 0)] {
                pt.push((v.to_string(), Rational::from(c)));
            }
            pt
        })
        .collect()
}

/// Seeded points of the locus with `x = 0`, `s = t = y3 = 0` and the rows
/// `(a11,b11), (a12,b12), (a21,b21), (c11,c12), (c21,c22), (−y2,y1)` all
/// multiples of one vector.
pub fn singular_y_points(seed: u64, n: usize) -> Vec<Vec<(String, Rational)>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let r = loop {
                let r = (small(&mut rng), small(&mut rng));
                if !(r.0.is_zero() && r.1.is_zero()) {
                    break r;
                }
            };
            let rows = [("a11", "b11"), ("a12", "b12"), ("a21", "b21"), ("c11", "c12"), ("c21", "c22")];
            let mut pt: Vec<(String, Rational)> = Vec::new();
            for (a, b) in rows {
                let l = small(&mut rng);
                pt.push((a.to_string(), &l * &r.0));
                pt.push((b.to_string(), &l * &r.1));
            }
            let l = small(&mut rng);
            pt.push(("y2".into(), -(&l * &r.0)));
            pt.push(("y1".into(), &l * &r.1));
            for v in ["x1", "x2", "x3", "y3", "s", "t"] {
                pt.push((v.to_string(), Rational::zero()));
            }
            pt
        })
        .collect()
}

/// Jacobian ranks at a batch of points, as one report record.
pub fn rank_record(name: &str, sys: &EquationSystem, points: &[Vec<(String, Rational)>], ok: impl Fn(usize) -> bool) -> Result<CheckRecord, VarietyError> {
    let ranks: Vec<usize> = points.iter().map(|p| jacobian_rank_at(sys, p)).collect::<Result<_, _>>()?;
    let on_locus = points
        .iter()
        .all(|p| sys.polynomials().iter().all(|f| evaluate_at(f, p).map(|v| v.is_zero()).unwrap_or(false)));
    let status = if on_locus && ranks.iter().all(|&r| ok(r)) { Status::Pass } else { Status::Fail };
    Ok(CheckRecord::with_status(name, status, 0).with_details(json!({ "ranks": ranks, "on_locus": on_locus })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_has_rank_zero() {
        let u14 = generate(VarietyId::U14).unwrap();
        let pt: Vec<(String, Rational)> = u14.ring().names().iter().map(|n| (n.clone(), Rational::zero())).collect();
        assert_eq!(jacobian_rank_at(&u14, &pt).unwrap(), 0);
    }

    #[test]
    fn chart_names() {
        for c in Chart::ALL {
            assert_eq!(c.as_str().parse::<Chart>().unwrap(), c);
        }
    }
}
