use std::collections::BTreeMap;

use exact_arith::{Monomial, Polynomial, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::PolyMatrix;

/// Scales a rational row to integers (common denominator cleared).
pub fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for c in row {
        l = l.lcm(c.denom());
    }
    row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

/// Fraction-free Gaussian elimination (Bareiss) in place; returns pivot columns.
/// After the call, rows `0..rank` form an echelon basis of the row space.
pub fn bareiss_integer(a: &mut [Vec<BigInt>]) -> Vec<usize> {
    let n = a.len();
    let m = a.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..m {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pr = &head[r];
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..m {
                let v = &pr[col] * &row[j] - &f * &pr[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = a[r][col].clone();
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Exact rank of a rational matrix.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    bareiss_integer(&mut a).len()
}

/// Reduced row echelon form over ℚ, computed from the fraction-free echelon form.
/// Returns the nonzero rows and the pivot columns.
pub fn rref(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let pivots = bareiss_integer(&mut a);
    let mut out: Vec<Vec<Rational>> = Vec::with_capacity(pivots.len());
    for (i, &pc) in pivots.iter().enumerate() {
        let lead = Rational::from(a[i][pc].clone());
        out.push(a[i].iter().map(|v| &Rational::from(v.clone()) / &lead).collect());
    }
    for i in (0..out.len()).rev() {
        let pc = pivots[i];
        for k in 0..i {
            let f = out[k][pc].clone();
            if f.is_zero() {
                continue;
            }
            let (upper, lower) = out.split_at_mut(i);
            for (x, y) in upper[k].iter_mut().zip(&lower[0]) {
                *x -= &(&f * y);
            }
        }
    }
    (out, pivots)
}

/// Basis of `{v : rows · v = 0}`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[i][f];
            }
            v
        })
        .collect()
}

/// Coefficient matrix of a list of polynomials (rows) over the union of their monomials.
pub fn coefficient_matrix(polys: &[Polynomial]) -> (Vec<Monomial>, Vec<Vec<Rational>>) {
    let mut cols: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in polys {
        for (m, _) in p.terms() {
            cols.entry(m.clone()).or_insert(0);
        }
    }
    let monos: Vec<Monomial> = cols.keys().rev().cloned().collect();
    for (i, m) in monos.iter().enumerate() {
        cols.insert(m.clone(), i);
    }
    let rows = polys
        .iter()
        .map(|p| {
            let mut row = vec![Rational::zero(); monos.len()];
            for (m, c) in p.terms() {
                row[cols[m]] = c.clone();
            }
            row
        })
        .collect();
    (monos, rows)
}

/// Dimension over ℚ of the span of `polys`.
pub fn span_dimension(polys: &[Polynomial]) -> usize {
    let (_, rows) = coefficient_matrix(polys);
    rational_rank(&rows)
}

/// Rank over the fraction field of the polynomial ring, by fraction-free
/// elimination with exact polynomial division.
pub fn poly_matrix_rank(m: &PolyMatrix) -> usize {
    let (n, c) = m.shape();
    let mut a: Vec<Vec<Polynomial>> = (0..n).map(|i| m.row(i).into_entries()).collect();
    let mut prev = Polynomial::one(m.ring());
    let mut r = 0;
    for col in 0..c {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !a[i][col].is_zero()) else { continue };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r + 1);
        let pr = &head[r];
        for row in tail.iter_mut() {
            let f = row[col].clone();
            for j in col + 1..c {
                let v = &(&pr[col] * &row[j]) - &(&f * &pr[j]);
                row[j] = v.exact_divide(&prev).expect("Bareiss division is exact");
            }
            row[col] = Polynomial::zero(m.ring());
        }
        prev = a[r][col].clone();
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::{qf, Ring};

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn span_examples() {
        let r = Ring::of(&["x", "y"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        assert_eq!(span_dimension(&[p("x"), p("2*x")]), 1);
        assert_eq!(span_dimension(&[p("x"), p("y"), p("x+y")]), 2);
        assert_eq!(span_dimension(&[]), 0);
        assert_eq!(span_dimension(&[p("0")]), 0);
    }

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![vec![q(1), q(2), q(3)], vec![q(2), q(4), q(6)], vec![q(1), q(0), qf(1, 2)]];
        assert_eq!(rational_rank(&rows), 2);
        let ns = nullspace(&rows, 3);
        assert_eq!(ns.len(), 1);
        for row in &rows {
            let dot = row.iter().zip(&ns[0]).fold(Rational::zero(), |acc, (a, b)| &acc + &(a * b));
            assert!(dot.is_zero());
        }
        let (r, piv) = rref(&rows);
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r[0][0], q(1));
        assert!(r[0][1].is_zero());
    }

    #[test]
    fn bareiss_skips_zero_columns() {
        let rows = vec![vec![q(0), q(1), q(1)], vec![q(0), q(2), q(3)], vec![q(0), q(0), q(0)]];
        assert_eq!(rational_rank(&rows), 2);
    }

    #[test]
    fn symbolic_rank() {
        let r = Ring::of(&["a", "b"]);
        let m = PolyMatrix::parse(&r, &[&["a", "b"], &["a^2", "a*b"]]).unwrap();
        assert_eq!(poly_matrix_rank(&m), 1);
        let m = PolyMatrix::parse(&r, &[&["a", "b"], &["b", "a"], &["1", "1"]]).unwrap();
        assert_eq!(poly_matrix_rank(&m), 2);
    }
}
