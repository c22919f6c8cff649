use std::sync::OnceLock;

use exact_arith::{Accumulator, Monomial, Polynomial, Rational, Ring};
use poly_linalg::{cross_product, PolyMatrix, PolyVector};

use crate::system::{FtsSystem, X_BLOCK, Y_BLOCK};
use crate::tensor::TripleTensor;
use crate::{FtsError, FtsPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    X,
    Y,
}

/// An [`FtsSystem`] with all structure constants moved into the ring of the
/// points being operated on. The ring must contain every parameter name.
pub struct FtsView<'a> {
    sys: &'a FtsSystem,
    ring: Ring,
    p: PolyMatrix,
    q: PolyMatrix,
    pt: PolyMatrix,
    qt: PolyMatrix,
    beta: PolyMatrix,
    nx: Vec<(Vec<u16>, Polynomial)>,
    ny: Vec<(Vec<u16>, Polynomial)>,
    tensor: OnceLock<TripleTensor>,
}

impl FtsSystem {
    pub fn view(&self, ring: &Ring) -> Result<FtsView<'_>, FtsError> {
        let p = self.p().embed(ring)?;
        let q = self.q().embed(ring)?;
        let forms = self.forms_ring();
        let block = |names: &[&str; 3]| -> Vec<usize> { names.iter().map(|n| forms.index_of(n).unwrap()).collect() };
        let coeffs = |f: &Polynomial, names: &[&str; 3]| -> Result<Vec<(Vec<u16>, Polynomial)>, FtsError> {
            f.coefficients_in(&block(names))
                .into_iter()
                .map(|(e, c)| Ok((e, c.embed_partial(ring)?)))
                .collect()
        };
        Ok(FtsView {
            sys: self,
            ring: ring.clone(),
            pt: p.transpose(),
            qt: q.transpose(),
            p,
            q,
            beta: self.beta_matrix().embed(ring)?,
            nx: coeffs(self.nx(), &X_BLOCK)?,
            ny: coeffs(self.ny(), &Y_BLOCK)?,
            tensor: OnceLock::new(),
        })
    }
}

impl<'a> FtsView<'a> {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn system(&self) -> &'a FtsSystem {
        self.sys
    }

    pub fn p(&self) -> &PolyMatrix {
        &self.p
    }

    pub fn q(&self) -> &PolyMatrix {
        &self.q
    }

    pub fn beta_matrix(&self) -> &PolyMatrix {
        &self.beta
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(&self.ring)
    }

    pub fn constant(&self, c: Rational) -> Polynomial {
        Polynomial::constant(&self.ring, c)
    }

    pub fn vector(&self, names: &[&str]) -> Result<PolyVector, FtsError> {
        Ok(PolyVector::from_vars(&self.ring, names)?)
    }

    /// `x♯ = ᵗPx × ᵗQx` (lands in `V_y`) or `y♯ = Py × Qy` (lands in `V_x`).
    pub fn sharp(&self, v: &PolyVector, side: Side) -> PolyVector {
        match side {
            Side::X => cross_product(&self.pt.mul_vec(v), &self.qt.mul_vec(v)).unwrap(),
            Side::Y => cross_product(&self.p.mul_vec(v), &self.q.mul_vec(v)).unwrap(),
        }
    }

    /// `a♯b = (a+b)♯ − a♯ − b♯`, evaluated in its expanded bilinear form.
    pub fn bisharp(&self, a: &PolyVector, b: &PolyVector, side: Side) -> PolyVector {
        let (m, n) = match side {
            Side::X => (&self.pt, &self.qt),
            Side::Y => (&self.p, &self.q),
        };
        let (ma, mb, na, nb) = (m.mul_vec(a), m.mul_vec(b), n.mul_vec(a), n.mul_vec(b));
        &cross_product(&ma, &nb).unwrap() + &cross_product(&mb, &na).unwrap()
    }

    /// Bisharp straight from the definition, kept as a second route for tests.
    pub fn bisharp_by_definition(&self, a: &PolyVector, b: &PolyVector, side: Side) -> PolyVector {
        &(&self.sharp(&(a + b), side) - &self.sharp(a, side)) - &self.sharp(b, side)
    }

    fn eval_form(&self, coeffs: &[(Vec<u16>, Polynomial)], v: &PolyVector) -> Polynomial {
        let mut powers: Vec<Vec<Polynomial>> = vec![vec![Polynomial::one(&self.ring)]; 3];
        let mut acc = Accumulator::new(&self.ring);
        for (e, c) in coeffs {
            let mut term = c.clone();
            for i in 0..3 {
                let k = e[i] as usize;
                while powers[i].len() <= k {
                    let next = powers[i].last().unwrap() * &v[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k];
                }
            }
            acc.add(&term);
        }
        acc.finish()
    }

    pub fn nx(&self, x: &PolyVector) -> Polynomial {
        self.eval_form(&self.nx, x)
    }

    pub fn ny(&self, y: &PolyVector) -> Polynomial {
        self.eval_form(&self.ny, y)
    }

    /// `β(a, b) = ᵗa B b` for `a ∈ V_x`, `b ∈ V_y`.
    pub fn beta(&self, a: &PolyVector, b: &PolyVector) -> Polynomial {
        self.beta.bilinear(a, b)
    }

    /// `p∙p∙p` from the cube formula.
    pub fn cube(&self, p: &FtsPoint) -> FtsPoint {
        let (s, t, x, y) = (&p.s, &p.t, &p.x, &p.y);
        let xs = self.sharp(x, Side::X);
        let ys = self.sharp(y, Side::Y);
        let b = self.beta(x, y);
        let st = s * t;
        let c = &st - &b;
        let two = Rational::from(2);
        let es = &(&(-&(s * &st)) + &(s * &b)) - &self.ny(y).scale(&two);
        let et = &(&(t * &st) - &(t * &b)) + &self.nx(x).scale(&two);
        let xc = &(&x.scale_poly(&c) + &self.bisharp(&xs, y, Side::Y).scale(&two)) - &ys.scale_poly(&t.scale(&two));
        let yc = &(&(-&y.scale_poly(&c)) - &self.bisharp(x, &ys, Side::X).scale(&two)) + &xs.scale_poly(&s.scale(&two));
        FtsPoint { s: es, t: et, x: xc, y: yc }
    }

    fn tensor(&self) -> &TripleTensor {
        self.tensor.get_or_init(|| self.sys.tensor().embed(&self.ring))
    }

    /// The symmetric trilinear product, contracted against the structure tensor.
    pub fn triple(&self, a: &FtsPoint, b: &FtsPoint, c: &FtsPoint) -> FtsPoint {
        self.tensor().contract(&self.ring, a, b, c)
    }

    /// The same product by the inclusion–exclusion linearization of the cube.
    pub fn triple_literal(&self, a: &FtsPoint, b: &FtsPoint, c: &FtsPoint) -> FtsPoint {
        let cu = |p: &FtsPoint| self.cube(p);
        let ab = a.add(b);
        let sum = cu(&ab.add(c))
            .sub(&cu(&ab))
            .sub(&cu(&a.add(c)))
            .sub(&cu(&b.add(c)))
            .add(&cu(a))
            .add(&cu(b))
            .add(&cu(c));
        sum.scale(&Rational::frac(1, 6))
    }

    /// `ω(p, p') = β(x, y') − β(x', y) + st' − s't`.
    pub fn omega(&self, p: &FtsPoint, pp: &FtsPoint) -> Polynomial {
        let a = &self.beta(&p.x, &pp.y) - &self.beta(&pp.x, &p.y);
        &(&a + &(&p.s * &pp.t)) - &(&pp.s * &p.t)
    }

    /// `F̃(p) = 8(β(y♯, x♯) − s·Nx − t·Ny) − 2(st − β(x, y))²`.
    pub fn quartic_f(&self, p: &FtsPoint) -> Polynomial {
        let xs = self.sharp(&p.x, Side::X);
        let ys = self.sharp(&p.y, Side::Y);
        let a = &(&self.beta(&ys, &xs) - &(&p.s * &self.nx(&p.x))) - &(&p.t * &self.ny(&p.y));
        let c = &(&p.s * &p.t) - &self.beta(&p.x, &p.y);
        &a.scale_i(8) - &c.pow(2).scale_i(2)
    }

    /// `Δ_x(x, y; x̃)` or `Δ_y(x, y; ỹ)` from the defining formulas.
    pub fn delta(&self, x: &PolyVector, y: &PolyVector, probe: &PolyVector, side: Side) -> PolyVector {
        let third = Rational::frac(-1, 3);
        let b = self.beta(x, y);
        match side {
            Side::X => {
                let a = probe.scale_poly(&b.scale(&third));
                let c = x.scale_poly(&self.beta(probe, y));
                let d = self.bisharp(&self.bisharp(x, probe, Side::X), y, Side::Y);
                &(&a - &c) + &d
            }
            Side::Y => {
                let a = probe.scale_poly(&b.scale(&third));
                let c = y.scale_poly(&self.beta(x, probe));
                let d = self.bisharp(&self.bisharp(y, probe, Side::Y), x, Side::X);
                &(&a - &c) + &d
            }
        }
    }

    /// Δ through the triple product:
    /// `Δ_x = β/6·x̃ − β(x̃,y)/2·x + 3 x∙x̃∙y` and `Δ_y = β/6·ỹ − β(x,ỹ)/2·y − 3 y∙ỹ∙x`.
    /// The off-block components of the triple product are returned alongside.
    pub fn delta_by_triple(&self, x: &PolyVector, y: &PolyVector, probe: &PolyVector, side: Side) -> (PolyVector, FtsPoint) {
        let b = self.beta(x, y).scale(&Rational::frac(1, 6));
        let half = Rational::frac(1, 2);
        let (px, py) = (FtsPoint::from_x(x), FtsPoint::from_y(y));
        match side {
            Side::X => {
                let tp = self.triple(&px, &FtsPoint::from_x(probe), &py);
                let d = &(&probe.scale_poly(&b) - &x.scale_poly(&self.beta(probe, y).scale(&half))) + &tp.x.scale(&Rational::from(3));
                let mut rest = tp;
                rest.x = PolyVector::zeros(&self.ring, 3);
                (d, rest)
            }
            Side::Y => {
                let tp = self.triple(&py, &FtsPoint::from_y(probe), &px);
                let d = &(&probe.scale_poly(&b) - &y.scale_poly(&self.beta(x, probe).scale(&half))) - &tp.y.scale(&Rational::from(3));
                let mut rest = tp;
                rest.y = PolyVector::zeros(&self.ring, 3);
                (d, rest)
            }
        }
    }

    /// `L_{a,b}` as an 8×8 matrix: column `k` is `a∙b∙e_k`.
    pub fn l_matrix(&self, a: &FtsPoint, b: &FtsPoint) -> PolyMatrix {
        let cols: Vec<PolyVector> = (0..8)
            .map(|k| PolyVector::from_vec(self.triple(a, b, &FtsPoint::basis(&self.ring, k)).components()))
            .collect();
        PolyMatrix::from_columns(&cols)
    }

    /// Monomial helper for building points from exponent vectors.
    pub fn monomial(&self, exps: Vec<u16>) -> Polynomial {
        Polynomial::monomial(&self.ring, Monomial::from_exps(exps), Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::point_names;
    use crate::system::{build_fts, diagonal_pair};

    fn diag() -> FtsSystem {
        let (p, q) = diagonal_pair();
        build_fts(&p, &q).unwrap()
    }

    #[test]
    fn diagonal_sharp() {
        let sys = diag();
        let r = Ring::new(&point_names("")).unwrap();
        let v = sys.view(&r).unwrap();
        let x = v.vector(&["x1", "x2", "x3"]).unwrap();
        let xs = v.sharp(&x, Side::X);
        assert_eq!(xs, PolyVector::parse(&r, &["-3*x2*x3", "-3*x1*x3", "-3*x1*x2"]).unwrap());
        assert_eq!(v.sharp(&xs, Side::Y), x.scale_poly(&v.nx(&x)));
        assert!(v.sharp(&PolyVector::zeros(&r, 3), Side::X).is_zero());
        let y = v.vector(&["y1", "y2", "y3"]).unwrap();
        assert_eq!(v.bisharp(&x, &y, Side::X), v.bisharp_by_definition(&x, &y, Side::X));
    }

    #[test]
    fn cube_substitutions() {
        let sys = diag();
        let r = Ring::new(&point_names("")).unwrap();
        let v = sys.view(&r).unwrap();
        let es = FtsPoint::e_s(&r);
        assert!(v.cube(&es).is_zero());
        let p = es.add(&FtsPoint::e_t(&r));
        let c = v.cube(&p);
        assert_eq!(c.s, Polynomial::constant(&r, -1));
        assert_eq!(c.t, Polynomial::constant(&r, 1));
        assert!(c.x.is_zero() && c.y.is_zero());
        assert_eq!(v.quartic_f(&p), Polynomial::constant(&r, -2));
        assert!(v.quartic_f(&es).is_zero());
        assert_eq!(v.omega(&es, &FtsPoint::e_t(&r)), Polynomial::one(&r));
    }

    #[test]
    fn quartic_is_omega_of_cube() {
        let sys = diag();
        let r = Ring::new(&point_names("")).unwrap();
        let v = sys.view(&r).unwrap();
        let p = FtsPoint::symbolic(&r, "").unwrap();
        assert!(v.omega(&p, &p).is_zero());
        assert_eq!(v.omega(&v.cube(&p), &p), v.quartic_f(&p));
    }

    #[test]
    fn triple_routes_agree() {
        let sys = diag();
        let names: Vec<String> = ["a", "b"].iter().flat_map(|p| point_names(p)).collect();
        let r = Ring::new(&names).unwrap();
        let v = sys.view(&r).unwrap();
        let a = FtsPoint::symbolic(&r, "a").unwrap();
        let b = FtsPoint::symbolic(&r, "b").unwrap();
        let es = FtsPoint::e_s(&r);
        assert_eq!(v.triple(&a, &b, &es), v.triple_literal(&a, &b, &es));
        assert_eq!(v.triple(&a, &a, &a), v.cube(&a));
        // x∙x∙e_s = (2/3) x♯ in V_y
        let x = FtsPoint::from_x(&a.x);
        let xxe = v.triple(&x, &x, &es);
        assert_eq!(xxe, FtsPoint::from_y(&v.sharp(&a.x, Side::X).scale(&Rational::frac(2, 3))));
    }
}
