use exact_arith::{Polynomial, Rational, Ring};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use poly_linalg::{span_dimension, DegreeBound, MacaulayBasis, PolyVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::point::point_names;
use crate::report::{CheckRecord, Report, Status};
use crate::system::{build_fts, FtsSystem};
use crate::view::{FtsView, Side};
use crate::{EquationSystem, FtsError, FtsPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxiomMode {
    /// Generic points over the system as given.
    Symbolic,
    /// Parameters replaced by seeded integers in `{−5..5}` first.
    Sampled,
}

fn point_ring(sys: &FtsSystem, prefixes: &[&str]) -> Result<Ring, FtsError> {
    let names: Vec<String> = prefixes.iter().flat_map(|p| point_names(p)).collect();
    Ok(sys.params().extend(&names)?)
}

fn residual(p: &FtsPoint) -> usize {
    p.nterms()
}

impl FtsSystem {
    /// Rebuilds the system with parameters set to the given values.
    pub fn specialize(&self, values: &[(String, Rational)]) -> Result<FtsSystem, FtsError> {
        let empty = Ring::new::<&str>(&[])?;
        let target: Vec<String> = self.params().names().iter().filter(|n| !values.iter().any(|(v, _)| v == *n)).cloned().collect();
        let ring = if target.is_empty() { empty } else { Ring::new(&target)? };
        let map: Vec<(&str, Rational)> = values.iter().map(|(n, c)| (n.as_str(), c.clone())).collect();
        let sub = |m: &poly_linalg::PolyMatrix| -> Result<poly_linalg::PolyMatrix, FtsError> {
            let mut out = m.clone();
            for i in 0..3 {
                for j in 0..3 {
                    out.set(i, j, m.get(i, j).subs_values(&map)?);
                }
            }
            Ok(out.embed(&ring)?)
        };
        build_fts(&sub(self.p())?, &sub(self.q())?)
    }

    /// Seeded specialization with nonzero `D_β`.
    pub fn sample(&self, seed: u64) -> Result<FtsSystem, FtsError> {
        if self.params().nvars() == 0 {
            return Ok(self.specialize(&[])?);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..1000 {
            let vals: Vec<(String, Rational)> =
                self.params().names().iter().map(|n| (n.clone(), Rational::from(rng.gen_range(-5i64..=5)))).collect();
            if let Ok(s) = self.specialize(&vals) {
                if !s.dbeta().is_zero() {
                    return Ok(s);
                }
            }
        }
        Err(FtsError::DegenerateTrace { nullity: 0 })
    }

    /// The same system with `N_x` replaced by `N_x + extra`; used as a negative control.
    pub fn with_modified_nx(&self, extra: &Polynomial) -> Result<FtsSystem, FtsError> {
        let mut s = self.specialize(&[])?;
        s.replace_nx(&(s.nx() + &extra.embed(s.forms_ring())?));
        Ok(s)
    }
}

/// Axioms (A1)–(A3) and the pentagram formula with generic points.
pub fn axiom_check(sys: &FtsSystem, mode: AxiomMode, seed: u64) -> Result<Report, FtsError> {
    let sampled;
    let sys = match mode {
        AxiomMode::Symbolic => sys,
        AxiomMode::Sampled => {
            sampled = sys.sample(seed)?;
            &sampled
        }
    };
    let ring = point_ring(sys, &["a", "b", "c", "d", "q"])?;
    let v = sys.view(&ring)?;
    let pt = |pre: &str| FtsPoint::symbolic(&ring, pre);
    let (a, b, c, d, q) = (pt("a")?, pt("b")?, pt("c")?, pt("d")?, pt("q")?);
    let seed_tag = match mode {
        AxiomMode::Sampled => Some(seed),
        AxiomMode::Symbolic => None,
    };

    let checks: Vec<(&str, Box<dyn Fn() -> usize + Sync + '_>)> = vec![
        (
            "A1",
            Box::new(|| {
                let base = v.triple(&a, &b, &c);
                let perms = [(&a, &c, &b), (&b, &a, &c), (&b, &c, &a), (&c, &a, &b), (&c, &b, &a)];
                let mut r: usize = perms.iter().map(|(x, y, z)| residual(&v.triple(x, y, z).sub(&base))).sum();
                r += residual(&v.triple_literal(&a, &b, &c).sub(&base));
                r += residual(&v.triple(&a, &a, &a).sub(&v.cube(&a)));
                r
            }),
        ),
        (
            "A2",
            Box::new(|| {
                let pts = [&a, &b, &c, &d];
                let form = |i: usize, j: usize, k: usize, l: usize| v.omega(&v.triple(pts[i], pts[j], pts[k]), pts[l]);
                let base = form(0, 1, 2, 3);
                if base.is_zero() {
                    return 1;
                }
                let mut r = 0;
                for perm in permutations4() {
                    r += (&form(perm[0], perm[1], perm[2], perm[3]) - &base).nterms();
                }
                r
            }),
        ),
        (
            "A3",
            Box::new(|| {
                let cp = v.cube(&a);
                let lhs = v.triple(&cp, &a, &b).scale(&Rational::from(6));
                let rhs = cp.scale_poly(&v.omega(&b, &a)).add(&a.scale_poly(&v.omega(&b, &cp)));
                residual(&lhs.sub(&rhs))
            }),
        ),
        ("pentagram", Box::new(|| residual(&pentagram_residual(&v, [&a, &b, &c, &d], &q)))),
    ];
    let records: Vec<CheckRecord> = checks
        .par_iter()
        .map(|(name, f)| CheckRecord::from_residual(*name, f()).with_seed(seed_tag))
        .collect();
    Ok(Report(records))
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    let p = [i, j, k, l];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Left side minus right side of the fully linearized (A3).
pub(crate) fn pentagram_residual(v: &FtsView, p: [&FtsPoint; 4], q: &FtsPoint) -> FtsPoint {
    // (i, j, k, missing)
    let combos = [(0, 1, 2, 3), (0, 1, 3, 2), (0, 2, 3, 1), (1, 2, 3, 0)];
    let mut lhs = FtsPoint::zero(v.ring());
    let mut rhs = FtsPoint::zero(v.ring());
    for (i, j, k, m) in combos {
        let t = v.triple(p[i], p[j], p[k]);
        lhs = lhs.add(&v.triple(&t, p[m], q));
        rhs = rhs.add(&t.scale_poly(&v.omega(q, p[m]))).add(&p[m].scale_poly(&v.omega(q, &t)));
    }
    lhs.scale(&Rational::from(6)).sub(&rhs)
}

/// Eigenvalues of `L_{e_s,e_t}` with multiplicities, and the `L²` residuals.
#[derive(Clone, Debug, PartialEq)]
pub struct PeirceSpectrum {
    pub eigenvalues: Vec<(Rational, usize)>,
    /// Degree of the part of the characteristic polynomial without rational roots.
    pub unresolved_degree: usize,
    /// `L²p − (1/12 ω(p,e_t)e_s − 1/12 ω(p,e_s)e_t + 1/36 p)`.
    pub l_squared_residual: usize,
    /// The same with `ω(p,e_t)` in the second term (the common variant of the formula).
    pub printed_form_residual: usize,
}

pub fn peirce_spectrum(sys: &FtsSystem) -> Result<PeirceSpectrum, FtsError> {
    let ring = point_ring(sys, &[""])?;
    let v = sys.view(&ring)?;
    let (es, et) = (FtsPoint::e_s(&ring), FtsPoint::e_t(&ring));
    let l = v.l_matrix(&es, &et);
    let a = l.to_rationals().ok_or_else(|| FtsError::IdentityViolation {
        label: "peirce".into(),
        residual: "L_{e_s,e_t} depends on parameters".into(),
    })?;
    let cp = char_poly(&a);
    let (eigenvalues, rest) = rational_roots(&cp);

    let p = FtsPoint::symbolic(&ring, "")?;
    let l2 = v.triple(&es, &et, &v.triple(&es, &et, &p));
    let c12 = Rational::frac(1, 12);
    let base = p.scale(&Rational::frac(1, 36)).add(&es.scale_poly(&v.omega(&p, &et).scale(&c12)));
    let fixed = base.sub(&et.scale_poly(&v.omega(&p, &es).scale(&c12)));
    let printed = base.sub(&et.scale_poly(&v.omega(&p, &et).scale(&c12)));
    Ok(PeirceSpectrum {
        eigenvalues,
        unresolved_degree: rest,
        l_squared_residual: residual(&l2.sub(&fixed)),
        printed_form_residual: residual(&l2.sub(&printed)),
    })
}

/// Characteristic polynomial `det(λI − A)` by Faddeev–LeVerrier, low degree first.
pub(crate) fn char_poly(a: &[Vec<Rational>]) -> Vec<Rational> {
    let n = a.len();
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = Rational::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !m[l][j].is_zero() {
                        s += &(&a[i][l] * &m[l][j]);
                    }
                }
                next[i][j] = s;
            }
            next[i][i] += &c[n - k + 1];
        }
        m = next;
        let mut tr = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                if !a[i][l].is_zero() && !m[l][i].is_zero() {
                    tr += &(&a[i][l] * &m[l][i]);
                }
            }
        }
        c[n - k] = -&(&tr / &Rational::from(k as i64));
    }
    c
}

fn horner(c: &[Rational], x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for a in c.iter().rev() {
        acc = &(&acc * x) + a;
    }
    acc
}

/// Divides by `(λ − r)`; the remainder is assumed zero.
fn deflate(c: &[Rational], r: &Rational) -> Vec<Rational> {
    let n = c.len() - 1;
    let mut out = vec![Rational::zero(); n];
    let mut carry = Rational::zero();
    for i in (0..n).rev() {
        carry = &c[i + 1] + &(&carry * r);
        out[i] = carry.clone();
    }
    out
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n && p < BigInt::from(1_000_000) {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for d in &out {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        out = next;
    }
    out
}

/// Rational roots with multiplicity (sorted ascending) and the degree left over.
pub(crate) fn rational_roots(c: &[Rational]) -> (Vec<(Rational, usize)>, usize) {
    let mut c: Vec<Rational> = c.to_vec();
    let mut roots: Vec<(Rational, usize)> = Vec::new();
    let mut zero_mult = 0;
    while c.len() > 1 && c[0].is_zero() {
        c.remove(0);
        zero_mult += 1;
    }
    if zero_mult > 0 {
        roots.push((Rational::zero(), zero_mult));
    }
    if c.len() > 1 {
        let mut l = BigInt::one();
        for a in &c {
            l = l.lcm(a.denom());
        }
        let ints: Vec<BigInt> = c.iter().map(|a| a.numer() * (&l / a.denom())).collect();
        let num = divisors(&ints[0]);
        let den = divisors(ints.last().unwrap());
        let mut cands: Vec<Rational> = Vec::new();
        for p in &num {
            for q in &den {
                for sgn in [1, -1] {
                    let r = Rational::from(num_rational::BigRational::new(p * sgn, q.clone()));
                    if !cands.contains(&r) {
                        cands.push(r);
                    }
                }
            }
        }
        for r in cands {
            let mut m = 0;
            while c.len() > 1 && horner(&c, &r).is_zero() {
                c = deflate(&c, &r);
                m += 1;
            }
            if m > 0 {
                roots.push((r, m));
            }
        }
    }
    roots.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    (roots, c.len() - 1)
}

type Identity<'a> = (&'static str, Box<dyn Fn() -> usize + Sync + 'a>);

/// The identity corpus of the Jordan-algebraic description, each checked by
/// symbolic expansion over generic `x, y, x̃, ỹ` (and `s, t, s̃, t̃`).
pub fn identity_suite(sys: &FtsSystem) -> Result<Report, FtsError> {
    let ring = point_ring(sys, &["", "q"])?;
    let v = sys.view(&ring)?;
    let p = FtsPoint::symbolic(&ring, "")?;
    let q = FtsPoint::symbolic(&ring, "q")?;
    let (x, y, xt, yt) = (p.x.clone(), p.y.clone(), q.x.clone(), q.y.clone());
    let (px, py, pxt, pyt) = (FtsPoint::from_x(&x), FtsPoint::from_y(&y), FtsPoint::from_x(&xt), FtsPoint::from_y(&yt));
    let (es, et) = (FtsPoint::e_s(&ring), FtsPoint::e_t(&ring));
    let xs = v.sharp(&x, Side::X);
    let ys = v.sharp(&y, Side::Y);
    let nx = v.nx(&x);
    let ny = v.ny(&y);
    let r = Rational::frac;
    let vres = |a: &PolyVector| a.iter().map(|e| e.nterms()).sum::<usize>();

    let ids: Vec<Identity> = vec![
        ("norm_x_from_omega", Box::new(|| (&nx - &v.omega(&es, &v.cube(&px)).scale(&r(1, 2))).nterms())),
        ("norm_y_from_omega", Box::new(|| (&ny - &v.omega(&et, &v.cube(&py)).scale(&r(1, 2))).nterms())),
        ("sharp_x_from_triple", Box::new(|| residual(&FtsPoint::from_y(&xs).sub(&v.triple(&px, &px, &es).scale(&r(3, 2)))))),
        ("sharp_y_from_triple", Box::new(|| residual(&FtsPoint::from_x(&ys).add(&v.triple(&py, &py, &et).scale(&r(3, 2)))))),
        (
            "bisharp_x_from_triple",
            Box::new(|| {
                let b = FtsPoint::from_y(&v.bisharp(&x, &xt, Side::X));
                residual(&b.sub(&v.triple(&px, &pxt, &es).scale(&r(3, 1))))
            }),
        ),
        (
            "bisharp_y_from_triple",
            Box::new(|| {
                let b = FtsPoint::from_x(&v.bisharp(&y, &yt, Side::Y));
                residual(&b.add(&v.triple(&py, &pyt, &et).scale(&r(3, 1))))
            }),
        ),
        (
            "bisharp_definition",
            Box::new(|| {
                vres(&(&v.bisharp(&x, &xt, Side::X) - &v.bisharp_by_definition(&x, &xt, Side::X)))
                    + vres(&(&v.bisharp(&y, &yt, Side::Y) - &v.bisharp_by_definition(&y, &yt, Side::Y)))
            }),
        ),
        ("norm_x_trace", Box::new(|| (&nx - &v.beta(&x, &xs).scale(&r(1, 3))).nterms())),
        ("norm_y_trace", Box::new(|| (&ny - &v.beta(&ys, &y).scale(&r(1, 3))).nterms())),
        (
            "norm_x_derivative",
            Box::new(|| {
                let d = nx.directional_derivative(&["qx1", "qx2", "qx3"], &["x1", "x2", "x3"]).unwrap();
                (&d - &v.beta(&xt, &xs)).nterms()
            }),
        ),
        (
            "norm_y_derivative",
            Box::new(|| {
                let d = ny.directional_derivative(&["qy1", "qy2", "qy3"], &["y1", "y2", "y3"]).unwrap();
                (&d - &v.beta(&ys, &yt)).nterms()
            }),
        ),
        (
            "xxes_xxes_et",
            Box::new(|| {
                let u = v.triple(&px, &px, &es);
                let lhs = v.triple(&u, &u, &et);
                let rhs = px.scale_poly(&v.omega(&v.cube(&px), &es).scale(&r(4, 27)));
                residual(&lhs.sub(&rhs))
            }),
        ),
        (
            "xxy_expansion",
            Box::new(|| {
                let lhs = v.triple(&px, &px, &py);
                let u = v.triple(&px, &px, &es);
                let rhs = px
                    .scale_poly(&v.omega(&px, &py).scale(&r(-1, 3)))
                    .sub(&v.triple(&u, &et, &py).scale(&r(3, 1)));
                residual(&lhs.sub(&rhs))
            }),
        ),
        ("adjoint_x", Box::new(|| vres(&(&v.sharp(&xs, Side::Y) - &x.scale_poly(&nx))))),
        ("adjoint_y", Box::new(|| vres(&(&v.sharp(&ys, Side::X) - &y.scale_poly(&ny))))),
        (
            "x_xsharp_xt",
            Box::new(|| {
                let lhs = v.triple(&px, &FtsPoint::from_y(&xs), &pxt);
                let rhs = px.scale_poly(&v.beta(&xt, &xs)).sub(&pxt.scale_poly(&nx)).scale(&r(1, 6));
                residual(&lhs.sub(&rhs))
            }),
        ),
        (
            "x_xsharp_y",
            Box::new(|| {
                let xsp = FtsPoint::from_y(&xs);
                let lhs = v.triple(&px, &xsp, &py);
                let rhs = py.scale_poly(&nx).sub(&xsp.scale_poly(&v.beta(&x, &y))).scale(&r(1, 6));
                residual(&lhs.sub(&rhs))
            }),
        ),
        (
            "y_ysharp_x",
            Box::new(|| {
                let ysp = FtsPoint::from_x(&ys);
                let lhs = v.triple(&py, &ysp, &px);
                let rhs = ysp.scale_poly(&v.beta(&x, &y)).sub(&px.scale_poly(&ny)).scale(&r(1, 6));
                residual(&lhs.sub(&rhs))
            }),
        ),
        (
            "delta_adjoint_1",
            Box::new(|| {
                let a = v.beta(&v.delta(&x, &y, &xt, Side::X), &yt);
                (&a - &v.beta(&xt, &v.delta(&x, &y, &yt, Side::Y))).nterms()
            }),
        ),
        (
            "delta_adjoint_2",
            Box::new(|| {
                let a = v.beta(&v.delta(&x, &y, &xt, Side::X), &yt);
                (&a - &v.beta(&x, &v.delta(&xt, &yt, &y, Side::Y))).nterms()
            }),
        ),
        (
            "delta_x_triple_form",
            Box::new(|| {
                let (d, rest) = v.delta_by_triple(&x, &y, &xt, Side::X);
                vres(&(&d - &v.delta(&x, &y, &xt, Side::X))) + residual(&rest)
            }),
        ),
        (
            "delta_y_triple_form",
            Box::new(|| {
                let (d, rest) = v.delta_by_triple(&x, &y, &yt, Side::Y);
                vres(&(&d - &v.delta(&x, &y, &yt, Side::Y))) + residual(&rest)
            }),
        ),
        (
            "delta_vanishing",
            Box::new(|| {
                vres(&v.delta(&x, &xs, &xt, Side::X))
                    + vres(&v.delta(&ys, &y, &xt, Side::X))
                    + vres(&v.delta(&ys, &y, &yt, Side::Y))
                    + vres(&v.delta(&x, &xs, &yt, Side::Y))
            }),
        ),
        ("quartic_is_omega_of_cube", Box::new(|| (&v.quartic_f(&p) - &v.omega(&v.cube(&p), &p)).nterms())),
        ("cube_is_diagonal_triple", Box::new(|| residual(&v.triple(&p, &p, &p).sub(&v.cube(&p))))),
        ("strict_regularity_display", Box::new(|| residual(&streg_display_residual(&v, &p, &q)))),
    ];
    let records: Vec<CheckRecord> = ids.par_iter().map(|(name, f)| CheckRecord::from_residual(*name, f())).collect();
    Ok(Report(records))
}

/// `3p∙p∙q + ω(p,q)p` for generic `p = (s,t,x,y)`, `q = (s̃,t̃,x̃,ỹ)`.
fn streg_expression(v: &FtsView, p: &FtsPoint, q: &FtsPoint) -> FtsPoint {
    v.triple(p, p, q).scale(&Rational::from(3)).add(&p.scale_poly(&v.omega(p, q)))
}

/// The same expression written blockwise through `Δ_x`, `Δ_y`, minus the triple-product route.
fn streg_display_residual(v: &FtsView, p: &FtsPoint, q: &FtsPoint) -> FtsPoint {
    let (s, t, x, y) = (&p.s, &p.t, &p.x, &p.y);
    let (st_, tt_, xt, yt) = (&q.s, &q.t, &q.x, &q.y);
    let b = v.beta(x, y);
    let xs = v.sharp(x, Side::X);
    let ys = v.sharp(y, Side::Y);
    let sx_ys = &x.scale_poly(s) - &ys; // in V_x
    let ty_xs = &y.scale_poly(t) - &xs; // in V_y
    let st = s * t;
    let c3 = &st.scale_i(3) - &b;
    let c1 = &st - &b.scale(&Rational::frac(1, 3));
    let es = &(-&(st_ * &c3)) + &v.beta(&sx_ys, yt).scale_i(2);
    let et = &(&c3 * tt_) - &v.beta(xt, &ty_xs).scale_i(2);
    let xc = &(&(&xt.scale_poly(&c1) + &sx_ys.scale_poly(&tt_.scale_i(2))) - &v.bisharp(yt, &ty_xs, Side::Y).scale(&Rational::from(2)))
        + &v.delta(x, y, xt, Side::X).scale(&Rational::from(2));
    let yc = &(&(&(-&yt.scale_poly(&c1)) - &ty_xs.scale_poly(&st_.scale_i(2))) + &v.bisharp(xt, &sx_ys, Side::X).scale(&Rational::from(2)))
        - &v.delta(x, y, yt, Side::Y).scale(&Rational::from(2));
    let display = FtsPoint { s: es, t: et, x: xc, y: yc };
    streg_expression(v, p, q).sub(&display)
}

pub const STREG_LABELS: [&str; 9] = ["sx1", "sx2", "sx3", "ty1", "ty2", "ty3", "st", "xPy", "xQy"];

/// The nine equations of the strictly regular locus in the ring of `view`,
/// which must contain `s, t, x1..x3, y1..y3`.
pub fn streg_equations_in(v: &FtsView, rescale: Option<(Rational, Rational)>) -> Result<Vec<(String, Polynomial)>, FtsError> {
    let ring = v.ring();
    let p = FtsPoint::symbolic(ring, "")?;
    let (mut s, mut t) = (p.s.clone(), p.t.clone());
    if let Some((mu, nu)) = rescale {
        s = s.scale(&mu.recip()?);
        t = t.scale(&nu.recip()?);
    }
    let ys = v.sharp(&p.y, Side::Y);
    let xs = v.sharp(&p.x, Side::X);
    let mut eqs = Vec::new();
    for i in 0..3 {
        eqs.push(&(&s * &p.x[i]) - &ys[i]);
    }
    for i in 0..3 {
        eqs.push(&(&t * &p.y[i]) - &xs[i]);
    }
    eqs.push(&(&s * &t) - &v.beta(&p.x, &p.y).scale(&Rational::frac(1, 3)));
    eqs.push(v.p().bilinear(&p.x, &p.y));
    eqs.push(v.q().bilinear(&p.x, &p.y));
    Ok(STREG_LABELS.iter().map(|l| l.to_string()).zip(eqs).collect())
}

/// The nine equations over `params ∪ {s, t, x, y}`. With `(μ, ν)` the variables
/// `s, t` are replaced by `s/μ, t/ν`, which turns the cross-product normalization
/// into one where the intrinsic sharp is `μ` (resp. `ν`) times the cross product.
pub fn streg_equations(sys: &FtsSystem, rescale: Option<(Rational, Rational)>) -> Result<EquationSystem, FtsError> {
    let ring = point_ring(sys, &[""])?;
    let v = sys.view(&ring)?;
    EquationSystem::new("streg", &ring, streg_equations_in(&v, rescale)?)
}

/// Certifies each probe coefficient of `3p∙p∙q + ω(p,q)p` in the ideal of the
/// nine equations. Equations whose labels appear in `exclude` are left out.
pub fn streg_consistency(sys: &FtsSystem, bound: u32, exclude: &[&str]) -> Result<Report, FtsError> {
    let pring = point_ring(sys, &[""])?;
    let full = point_ring(sys, &["", "q"])?;
    let v = sys.view(&full)?;
    let p = FtsPoint::symbolic(&full, "")?;
    let q = FtsPoint::symbolic(&full, "q")?;
    let expr = streg_expression(&v, &p, &q);

    let pv = sys.view(&pring)?;
    let gens: Vec<Polynomial> = streg_equations_in(&pv, None)?
        .into_iter()
        .filter(|(l, _)| !exclude.contains(&l.as_str()))
        .map(|(_, g)| g)
        .collect();
    let pvars: Vec<usize> = point_names("").iter().map(|n| pring.index_of(n).unwrap()).collect();
    let basis = MacaulayBasis::new(&gens, DegreeBound::total(bound), &pvars)?;
    let qnames = point_names("q");
    let comp_names = point_names("");
    let comps = expr.components();
    let records: Vec<CheckRecord> = comps
        .par_iter()
        .enumerate()
        .map(|(k, comp)| {
            let mut missing = 0;
            for qn in &qnames {
                let coef = comp.derivative_by(qn).unwrap().embed_partial(&pring).unwrap();
                match basis.certify(&coef) {
                    Ok(cert) if cert.verify() => {}
                    _ => missing += 1,
                }
            }
            let status = if missing == 0 { Status::Pass } else { Status::Inconclusive };
            CheckRecord::with_status(format!("streg_consistency:{}", comp_names[k]), status, missing)
        })
        .collect();
    Ok(Report(records))
}

/// Dimension of the span of the three entries of `Δ_x(x, y; probe)`.
pub fn delta_span_dim(sys: &FtsSystem, probe: &[Rational; 3]) -> Result<usize, FtsError> {
    Ok(delta_span(sys, probe)?.0)
}

/// Span dimension of the `Δ_x` entries, and whether adding `ᵗxPy, ᵗxQy` keeps it.
pub fn delta_span(sys: &FtsSystem, probe: &[Rational; 3]) -> Result<(usize, bool), FtsError> {
    let ring = point_ring(sys, &[""])?;
    let v = sys.view(&ring)?;
    let pr = PolyVector::from_constants(&ring, probe);
    let n = v.nx(&pr);
    if n.is_zero() {
        return Err(FtsError::BadProbe);
    }
    if !sys.is_rational() {
        return Err(FtsError::BadProbe);
    }
    let x = v.vector(&["x1", "x2", "x3"])?;
    let y = v.vector(&["y1", "y2", "y3"])?;
    let d = v.delta(&x, &y, &pr, Side::X);
    let dim = span_dimension(d.entries());
    let mut with = d.entries().to_vec();
    with.push(v.p().bilinear(&x, &y));
    with.push(v.q().bilinear(&x, &y));
    Ok((dim, span_dimension(&with) == dim))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{diagonal_pair, random_systems};
    use exact_arith::qf;

    fn diag() -> FtsSystem {
        let (p, q) = diagonal_pair();
        build_fts(&p, &q).unwrap()
    }

    #[test]
    fn char_poly_and_roots() {
        let a = vec![
            vec![Rational::from(2), Rational::from(1)],
            vec![Rational::from(0), Rational::from(2)],
        ];
        let cp = char_poly(&a);
        assert_eq!(cp, vec![Rational::from(4), Rational::from(-4), Rational::from(1)]);
        let (roots, rest) = rational_roots(&cp);
        assert_eq!(roots, vec![(Rational::from(2), 2)]);
        assert_eq!(rest, 0);
        // λ² − 2 has no rational roots
        let (roots, rest) = rational_roots(&[Rational::from(-2), Rational::zero(), Rational::one()]);
        assert!(roots.is_empty());
        assert_eq!(rest, 2);
    }

    #[test]
    fn peirce_on_diagonal() {
        let sp = peirce_spectrum(&diag()).unwrap();
        assert_eq!(
            sp.eigenvalues,
            vec![(qf(-1, 3), 1), (qf(-1, 6), 3), (qf(1, 6), 3), (qf(1, 3), 1)]
        );
        assert_eq!(sp.unresolved_degree, 0);
        assert_eq!(sp.l_squared_residual, 0);
        assert!(sp.printed_form_residual > 0);
    }

    #[test]
    fn identities_on_diagonal() {
        let rep = identity_suite(&diag()).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failures());
    }

    #[test]
    fn axioms_on_diagonal() {
        let rep = axiom_check(&diag(), AxiomMode::Symbolic, 0).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failures());
    }

    #[test]
    fn corrupted_norm_breaks_a3() {
        let sys = diag();
        let extra = Polynomial::parse(sys.forms_ring(), "x1^3").unwrap();
        let bad = sys.with_modified_nx(&extra).unwrap();
        let rep = axiom_check(&bad, AxiomMode::Symbolic, 0).unwrap();
        assert_eq!(rep.get("A3").unwrap().status, Status::Fail);
    }

    #[test]
    fn delta_span_examples() {
        let sys = diag();
        let one = Rational::one();
        assert_eq!(delta_span(&sys, &[one.clone(), one.clone(), one.clone()]).unwrap(), (2, true));
        let e1 = [one, Rational::zero(), Rational::zero()];
        assert!(matches!(delta_span_dim(&sys, &e1), Err(FtsError::BadProbe)));
    }

    #[test]
    fn streg_on_diagonal() {
        let sys = diag();
        let rep = streg_consistency(&sys, 4, &[]).unwrap();
        assert!(rep.all_pass(), "{:?}", rep.failures());
        let rep = streg_consistency(&sys, 4, &["xPy"]).unwrap();
        assert!(!rep.all_pass());
    }

    #[test]
    fn random_identities() {
        for sys in random_systems(7, 1) {
            assert!(identity_suite(&sys).unwrap().all_pass());
        }
    }
}
