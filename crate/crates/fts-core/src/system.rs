use std::sync::OnceLock;

use exact_arith::{Polynomial, Rational, Ring};
use poly_linalg::{cross_product, det, poly_matrix_rank, PolyMatrix, PolyVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::tensor::TripleTensor;
use crate::FtsError;

pub const X_BLOCK: [&str; 3] = ["x1", "x2", "x3"];
pub const Y_BLOCK: [&str; 3] = ["y1", "y2", "y3"];

/// The FTS attached to a matrix pair (P, Q): sharps are cross products,
/// the norms and the trace form are solved from the identities they must satisfy.
pub struct FtsSystem {
    params: Ring,
    forms: Ring,
    p: PolyMatrix,
    q: PolyMatrix,
    nx: Polynomial,
    ny: Polynomial,
    beta: PolyMatrix,
    dbeta: Polynomial,
    tensor: OnceLock<TripleTensor>,
}

impl FtsSystem {
    /// Ring of the matrix entries.
    pub fn params(&self) -> &Ring {
        &self.params
    }

    /// Parameter ring extended by the coordinate blocks `x1..x3, y1..y3`.
    pub fn forms_ring(&self) -> &Ring {
        &self.forms
    }

    pub fn p(&self) -> &PolyMatrix {
        &self.p
    }

    pub fn q(&self) -> &PolyMatrix {
        &self.q
    }

    /// The cubic norm on the x-block, in the forms ring.
    pub fn nx(&self) -> &Polynomial {
        &self.nx
    }

    pub fn ny(&self) -> &Polynomial {
        &self.ny
    }

    /// Matrix `B` with `β(a, b) = ᵗa B b`, entries in the parameter ring.
    pub fn beta_matrix(&self) -> &PolyMatrix {
        &self.beta
    }

    pub fn dbeta(&self) -> &Polynomial {
        &self.dbeta
    }

    pub fn is_rational(&self) -> bool {
        self.params.nvars() == 0 || self.p.entries().iter().chain(self.q.entries()).all(|e| e.is_constant())
    }

    pub(crate) fn replace_nx(&mut self, nx: &Polynomial) {
        self.nx = nx.clone();
        self.tensor = OnceLock::new();
    }

    pub(crate) fn tensor(&self) -> &TripleTensor {
        self.tensor.get_or_init(|| TripleTensor::build(self))
    }

    /// Symbolic check of the two norm identities and the two derivative identities.
    /// Returns the residual term counts `[x-norm, y-norm, x-derivative, y-derivative]`.
    pub fn invariant_residuals(&self) -> [usize; 4] {
        let r = &self.forms;
        let x = PolyVector::from_vars(r, &X_BLOCK).unwrap();
        let y = PolyVector::from_vars(r, &Y_BLOCK).unwrap();
        let p = self.p.embed(r).unwrap();
        let q = self.q.embed(r).unwrap();
        let b = self.beta.embed(r).unwrap();
        let xs = cross_product(&p.transpose().mul_vec(&x), &q.transpose().mul_vec(&x)).unwrap();
        let ys = cross_product(&p.mul_vec(&y), &q.mul_vec(&y)).unwrap();
        let xss = cross_product(&p.mul_vec(&xs), &q.mul_vec(&xs)).unwrap();
        let yss = cross_product(&p.transpose().mul_vec(&ys), &q.transpose().mul_vec(&ys)).unwrap();
        let r1: usize = (0..3).map(|i| (&xss[i] - &(&self.nx * &x[i])).nterms()).sum();
        let r2: usize = (0..3).map(|i| (&yss[i] - &(&self.ny * &y[i])).nterms()).sum();
        // derivative identities, compared coefficientwise in the direction vector
        let mut r3 = 0;
        let bxs = b.mul_vec(&xs);
        let ysb = b.vec_mul(&ys);
        for i in 0..3 {
            let dx = self.nx.derivative(r.index_of(X_BLOCK[i]).unwrap());
            r3 += (&dx - &bxs[i]).nterms();
        }
        let mut r4 = 0;
        for j in 0..3 {
            let dy = self.ny.derivative(r.index_of(Y_BLOCK[j]).unwrap());
            r4 += (&dy - &ysb[j]).nterms();
        }
        [r1, r2, r3, r4]
    }
}

/// Builds the FTS of `(P, Q)`; entries live in one parameter ring that must not
/// use the reserved block names.
pub fn build_fts(p: &PolyMatrix, q: &PolyMatrix) -> Result<FtsSystem, FtsError> {
    if p.shape() != (3, 3) || q.shape() != (3, 3) {
        return Err(FtsError::Shape);
    }
    let params = p.ring().clone();
    if !q.ring().same(&params) {
        return Err(FtsError::RingMismatch);
    }
    for n in X_BLOCK.iter().chain(Y_BLOCK.iter()).chain(["s", "t"].iter()) {
        if params.contains(n) {
            return Err(FtsError::ReservedName(n.to_string()));
        }
    }
    let forms = params.extend(&[X_BLOCK, Y_BLOCK].concat())?;
    let pf = p.embed(&forms)?;
    let qf = q.embed(&forms)?;
    let x = PolyVector::from_vars(&forms, &X_BLOCK)?;
    let y = PolyVector::from_vars(&forms, &Y_BLOCK)?;
    let xs = cross_product(&pf.transpose().mul_vec(&x), &qf.transpose().mul_vec(&x))?;
    let ys = cross_product(&pf.mul_vec(&y), &qf.mul_vec(&y))?;
    let xss = cross_product(&pf.mul_vec(&xs), &qf.mul_vec(&xs))?;
    let yss = cross_product(&pf.transpose().mul_vec(&ys), &qf.transpose().mul_vec(&ys))?;
    let nx = common_quotient(&xss, &x, "x")?;
    let ny = common_quotient(&yss, &y, "y")?;

    let xidx: Vec<usize> = X_BLOCK.iter().map(|n| forms.index_of(n).unwrap()).collect();
    let yidx: Vec<usize> = Y_BLOCK.iter().map(|n| forms.index_of(n).unwrap()).collect();
    // coefficient matrices of the sharps over the six quadratic monomials
    let cx = quadric_coefficients(&xs, &xidx);
    let cy = quadric_coefficients(&ys, &yidx);
    let rx = poly_matrix_rank(&cx);
    let ry = poly_matrix_rank(&cy);

    let beta_f = if rx == 3 {
        // row i of B from  ∂Nx/∂x_i = Σ_j B_ij x♯_j
        let rows: Vec<Vec<Polynomial>> = (0..3)
            .map(|i| {
                let rhs = quadric_coefficients_single(&nx.derivative(xidx[i]), &xidx);
                solve_full_rank(&cx, &rhs)
            })
            .collect::<Result<_, _>>()?;
        PolyMatrix::from_rows(&forms, rows)?
    } else if ry == 3 {
        // column j of B from  ∂Ny/∂y_j = Σ_i y♯_i B_ij
        let cols: Vec<Vec<Polynomial>> = (0..3)
            .map(|j| {
                let rhs = quadric_coefficients_single(&ny.derivative(yidx[j]), &yidx);
                solve_full_rank(&cy, &rhs)
            })
            .collect::<Result<_, _>>()?;
        PolyMatrix::from_rows(&forms, cols)?.transpose()
    } else {
        return Err(FtsError::DegenerateTrace { nullity: (3 - rx) * (3 - ry) });
    };
    let beta = beta_f.embed(&params)?;
    let dbeta = det(&beta)?;
    Ok(FtsSystem { params, forms, p: p.clone(), q: q.clone(), nx, ny, beta, dbeta, tensor: OnceLock::new() })
}

/// The quotient `v_i / x_i`, which must be the same for all three components.
fn common_quotient(v: &PolyVector, x: &PolyVector, side: &str) -> Result<Polynomial, FtsError> {
    let mut quotient: Option<Polynomial> = None;
    for i in 0..3 {
        let qi = v[i].exact_divide(&x[i]).map_err(|_| FtsError::InconsistentDivision(side.into()))?;
        match &quotient {
            None => quotient = Some(qi),
            Some(q0) if *q0 == qi => {}
            Some(_) => return Err(FtsError::InconsistentDivision(side.into())),
        }
    }
    Ok(quotient.unwrap())
}

const QUADRATIC_MONOMIALS: [[u16; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];

/// 6×3 matrix whose column j holds the coefficients of `v_j` on the quadratic
/// monomials of the block.
fn quadric_coefficients(v: &PolyVector, block: &[usize]) -> PolyMatrix {
    let ring = v.ring();
    PolyMatrix::from_fn(ring, 6, 3, |m, j| v[j].coefficient_of(block, &QUADRATIC_MONOMIALS[m]))
}

fn quadric_coefficients_single(f: &Polynomial, block: &[usize]) -> Vec<Polynomial> {
    QUADRATIC_MONOMIALS.iter().map(|e| f.coefficient_of(block, e)).collect()
}

/// Solves the overdetermined system `C · b = rhs` (C is 6×3 of rank 3) by
/// Cramer's rule on the first nonsingular 3×3 row selection; the remaining rows
/// are checked.
fn solve_full_rank(c: &PolyMatrix, rhs: &[Polynomial]) -> Result<Vec<Polynomial>, FtsError> {
    let n = c.nrows();
    for a in 0..n {
        for b in a + 1..n {
            for d in b + 1..n {
                let rows = [a, b, d];
                let sub = c.submatrix(&rows, &[0, 1, 2]);
                let dd = det(&sub)?;
                if dd.is_zero() {
                    continue;
                }
                let mut sol = Vec::with_capacity(3);
                for j in 0..3 {
                    let mut m = sub.clone();
                    for (k, &r) in rows.iter().enumerate() {
                        m.set(k, j, rhs[r].clone());
                    }
                    let num = det(&m)?;
                    sol.push(num.exact_divide(&dd).map_err(|_| FtsError::NonPolynomialTrace)?);
                }
                for r in 0..n {
                    let mut lhs = Polynomial::zero(c.ring());
                    for (j, s) in sol.iter().enumerate() {
                        lhs = &lhs + &(c.get(r, j) * s);
                    }
                    if lhs != rhs[r] {
                        return Err(FtsError::InconsistentTrace);
                    }
                }
                return Ok(sol);
            }
        }
    }
    Err(FtsError::DegenerateTrace { nullity: 0 })
}

/// Parses a 3×3 pair whose entries are integers, `a/b` strings, or polynomial
/// expressions; every variable name met becomes a parameter (first-seen order).
pub fn parse_pair(p: &[[&str; 3]; 3], q: &[[&str; 3]; 3]) -> Result<(PolyMatrix, PolyMatrix), FtsError> {
    let mut names: Vec<String> = Vec::new();
    for m in [p, q] {
        for row in m.iter() {
            for e in row.iter() {
                for tok in e.split(|c: char| !(c.is_alphanumeric() || c == '_')) {
                    if tok.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                        && !names.iter().any(|n| n == tok)
                    {
                        names.push(tok.to_string());
                    }
                }
            }
        }
    }
    let ring = Ring::new(&names)?;
    let to_m = |m: &[[&str; 3]; 3]| -> Result<PolyMatrix, FtsError> {
        let rows: Vec<&[&str]> = m.iter().map(|r| r.as_slice()).collect();
        Ok(PolyMatrix::parse(&ring, &rows)?)
    };
    Ok((to_m(p)?, to_m(q)?))
}

/// The pair `P = diag(2,−1,−1)`, `Q = diag(1,−2,1)`.
pub fn diagonal_pair() -> (PolyMatrix, PolyMatrix) {
    parse_pair(
        &[["2", "0", "0"], ["0", "-1", "0"], ["0", "0", "-1"]],
        &[["1", "0", "0"], ["0", "-2", "0"], ["0", "0", "1"]],
    )
    .expect("literal pair")
}

/// Fully parametric pair with entries `p11..p33`, `q11..q33`.
pub fn parametric_pair() -> (PolyMatrix, PolyMatrix) {
    let names: Vec<String> = ["p", "q"]
        .iter()
        .flat_map(|m| (1..=3).flat_map(move |i| (1..=3).map(move |j| format!("{m}{i}{j}"))))
        .collect();
    let ring = Ring::new(&names).unwrap();
    let m = |pre: &str| PolyMatrix::from_fn(&ring, 3, 3, |i, j| Polynomial::v(&ring, &format!("{pre}{}{}", i + 1, j + 1)));
    (m("p"), m("q"))
}

/// Pair with constant entries in an empty parameter ring.
pub fn rational_pair(p: &[[Rational; 3]; 3], q: &[[Rational; 3]; 3]) -> (PolyMatrix, PolyMatrix) {
    let ring = Ring::new::<&str>(&[]).unwrap();
    let m = |a: &[[Rational; 3]; 3]| PolyMatrix::from_fn(&ring, 3, 3, |i, j| Polynomial::constant(&ring, a[i][j].clone()));
    (m(p), m(q))
}

/// Seeded random pairs with entries in `{−5, …, 5}` and `D_β ≠ 0`.
pub fn random_pairs(seed: u64, count: usize) -> Vec<(PolyMatrix, PolyMatrix)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let mut draw = || -> [[Rational; 3]; 3] {
            std::array::from_fn(|_| std::array::from_fn(|_| Rational::from(rng.gen_range(-5i64..=5))))
        };
        let (a, b) = (draw(), draw());
        let (p, q) = rational_pair(&a, &b);
        if let Ok(sys) = build_fts(&p, &q) {
            if !sys.dbeta().is_zero() {
                out.push((p, q));
            }
        }
    }
    out
}

/// Like [`random_pairs`] but returns built systems.
pub fn random_systems(seed: u64, count: usize) -> Vec<FtsSystem> {
    random_pairs(seed, count).iter().map(|(p, q)| build_fts(p, q).expect("accepted pair builds")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_example() {
        let (p, q) = diagonal_pair();
        let sys = build_fts(&p, &q).unwrap();
        assert_eq!(sys.nx().to_string(), "-27*x1*x2*x3");
        assert_eq!(sys.ny().to_string(), "-27*y1*y2*y3");
        let nine = PolyMatrix::identity(sys.params(), 3).scale(&Rational::from(9));
        assert_eq!(sys.beta_matrix(), &nine);
        assert_eq!(sys.dbeta().constant_value(), Some(Rational::from(729)));
        assert_eq!(sys.invariant_residuals(), [0, 0, 0, 0]);
    }

    #[test]
    fn identity_pair_is_degenerate() {
        let r = Ring::new::<&str>(&[]).unwrap();
        let i = PolyMatrix::identity(&r, 3);
        match build_fts(&i, &i) {
            Err(FtsError::DegenerateTrace { nullity }) => assert_eq!(nullity, 9),
            other => panic!("expected DegenerateTrace, got {:?}", other.err()),
        }
    }

    #[test]
    fn seeded_pairs_are_reproducible() {
        let a = random_pairs(42, 2);
        let b = random_pairs(42, 2);
        assert_eq!(a[0].0, b[0].0);
        assert_eq!(a[1].1, b[1].1);
        for (p, q) in &a {
            assert_eq!(build_fts(p, q).unwrap().invariant_residuals(), [0, 0, 0, 0]);
        }
    }

    #[test]
    fn reserved_names_rejected() {
        let (p, q) = parse_pair(&[["x1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]], &[["1", "0", "0"]; 3]).unwrap();
        assert!(matches!(build_fts(&p, &q), Err(FtsError::ReservedName(_))));
    }
}
