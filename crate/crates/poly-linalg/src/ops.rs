use exact_arith::Polynomial;

use crate::{LinalgError, PolyMatrix, PolyVector};

pub fn cross_product(u: &PolyVector, v: &PolyVector) -> Result<PolyVector, LinalgError> {
    if u.len() != 3 || v.len() != 3 {
        return Err(LinalgError::LengthMismatch);
    }
    let c = |i: usize, j: usize| &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
    Ok(PolyVector::from_vec(vec![c(1, 2), c(2, 0), c(0, 1)]))
}

/// Signed 2×2 minors `(m₂₃, −m₁₃, m₁₂)` of a 2×3 or 3×2 matrix.
pub fn wedge2(m: &PolyMatrix) -> Result<PolyVector, LinalgError> {
    let m = match m.shape() {
        (2, 3) => m.clone(),
        (3, 2) => m.transpose(),
        s => return Err(LinalgError::ShapeError(format!("wedge2 of {}x{}", s.0, s.1))),
    };
    let minor = |i: usize, j: usize| &(m.get(0, i) * m.get(1, j)) - &(m.get(0, j) * m.get(1, i));
    Ok(PolyVector::from_vec(vec![minor(1, 2), -minor(0, 2), minor(0, 1)]))
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    if m.nrows() != m.ncols() {
        return Err(LinalgError::ShapeError("det of non-square matrix".into()));
    }
    let idx: Vec<usize> = (0..m.nrows()).collect();
    Ok(det_rec(m, 0, &idx))
}

fn det_rec(m: &PolyMatrix, row: usize, cols: &[usize]) -> Polynomial {
    let ring = m.ring();
    match cols.len() {
        0 => Polynomial::one(ring),
        1 => m.get(row, cols[0]).clone(),
        2 => &(m.get(row, cols[0]) * m.get(row + 1, cols[1])) - &(m.get(row, cols[1]) * m.get(row + 1, cols[0])),
        _ => {
            let mut acc = Polynomial::zero(ring);
            for (k, &c) in cols.iter().enumerate() {
                let a = m.get(row, c);
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let t = a * &det_rec(m, row + 1, &rest);
                acc = if k % 2 == 0 { &acc + &t } else { &acc - &t };
            }
            acc
        }
    }
}

/// Classical adjugate: `M · adj(M) = det(M) · I`.
pub fn adjugate(m: &PolyMatrix) -> Result<PolyMatrix, LinalgError> {
    let n = m.nrows();
    if n != m.ncols() {
        return Err(LinalgError::ShapeError("adjugate of non-square matrix".into()));
    }
    if n == 1 {
        return Ok(PolyMatrix::identity(m.ring(), 1));
    }
    let all: Vec<usize> = (0..n).collect();
    Ok(PolyMatrix::from_fn(m.ring(), n, n, |i, j| {
        // entry (i,j) is the (j,i) cofactor
        let rows: Vec<usize> = all.iter().copied().filter(|&r| r != j).collect();
        let cols: Vec<usize> = all.iter().copied().filter(|&c| c != i).collect();
        let d = det(&m.submatrix(&rows, &cols)).expect("square");
        if (i + j) % 2 == 0 { d } else { -d }
    }))
}

pub fn trace(m: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    if m.nrows() != m.ncols() {
        return Err(LinalgError::ShapeError("trace of non-square matrix".into()));
    }
    let mut acc = Polynomial::zero(m.ring());
    for i in 0..m.nrows() {
        acc = &acc + m.get(i, i);
    }
    Ok(acc)
}

pub fn det_adj_trace(m: &PolyMatrix) -> Result<(Polynomial, PolyMatrix, Polynomial), LinalgError> {
    if m.nrows() != m.ncols() || !(2..=3).contains(&m.nrows()) {
        return Err(LinalgError::ShapeError(format!("expected 2x2 or 3x3, got {:?}", m.shape())));
    }
    Ok((det(m)?, adjugate(m)?, trace(m)?))
}

/// Pfaffian of an even skew-symmetric matrix, with `pf [[0,a],[-a,0]] = a`.
pub fn pfaffian(s: &PolyMatrix) -> Result<Polynomial, LinalgError> {
    if !s.is_skew() {
        return Err(LinalgError::NotSkew);
    }
    if s.nrows() % 2 == 1 {
        return Ok(Polynomial::zero(s.ring()));
    }
    let idx: Vec<usize> = (0..s.nrows()).collect();
    Ok(pf_rec(s, &idx))
}

fn pf_rec(s: &PolyMatrix, idx: &[usize]) -> Polynomial {
    if idx.is_empty() {
        return Polynomial::one(s.ring());
    }
    let first = idx[0];
    let mut acc = Polynomial::zero(s.ring());
    for k in 1..idx.len() {
        let a = s.get(first, idx[k]);
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[k]).collect();
        let t = a * &pf_rec(s, &rest);
        acc = if k % 2 == 1 { &acc + &t } else { &acc - &t };
    }
    acc
}

/// The five principal 4×4 Pfaffians of a 5×5 skew matrix; the `i`-th deletes
/// row and column `i` and carries the sign `(−1)^i` (0-based).
pub fn pfaffians_4x4(s: &PolyMatrix) -> Result<Vec<Polynomial>, LinalgError> {
    if s.shape() != (5, 5) {
        return Err(LinalgError::ShapeError(format!("expected 5x5, got {:?}", s.shape())));
    }
    if !s.is_skew() {
        return Err(LinalgError::NotSkew);
    }
    Ok((0..5)
        .map(|i| {
            let keep: Vec<usize> = (0..5).filter(|&k| k != i).collect();
            let p = pfaffian(&s.submatrix(&keep, &keep)).expect("skew");
            if i % 2 == 0 { p } else { -p }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_arith::Ring;

    #[test]
    fn cross_examples() {
        let r = Ring::of(&["x1", "x2", "x3"]);
        let e1 = PolyVector::parse(&r, &["1", "0", "0"]).unwrap();
        let e2 = PolyVector::parse(&r, &["0", "1", "0"]).unwrap();
        assert_eq!(cross_product(&e1, &e2).unwrap(), PolyVector::parse(&r, &["0", "0", "1"]).unwrap());
        let u = PolyVector::parse(&r, &["2*x1", "-x2", "-x3"]).unwrap();
        let v = PolyVector::parse(&r, &["x1", "-2*x2", "x3"]).unwrap();
        assert_eq!(
            cross_product(&u, &v).unwrap(),
            PolyVector::parse(&r, &["-3*x2*x3", "-3*x1*x3", "-3*x1*x2"]).unwrap()
        );
        assert!(cross_product(&u, &u).unwrap().is_zero());
        let short = PolyVector::parse(&r, &["1", "0"]).unwrap();
        assert!(matches!(cross_product(&short, &u), Err(LinalgError::LengthMismatch)));
    }

    #[test]
    fn wedge_examples() {
        let r = Ring::of(&["d0", "d1", "d2", "d3"]);
        let m = PolyMatrix::parse(&r, &[&["1", "0", "0"], &["0", "1", "0"]]).unwrap();
        assert_eq!(wedge2(&m).unwrap(), PolyVector::parse(&r, &["0", "0", "1"]).unwrap());
        let d = PolyMatrix::parse(&r, &[&["d2", "d1", "d0"], &["-d3", "-d2", "-d1"]]).unwrap();
        // minors computed by hand: m23 = -d1^2 + d0 d2, m13 = -d1 d2 + d0 d3, m12 = -d2^2 + d1 d3
        assert_eq!(
            wedge2(&d).unwrap(),
            PolyVector::parse(&r, &["d0*d2 - d1^2", "d1*d2 - d0*d3", "d1*d3 - d2^2"]).unwrap()
        );
        assert_eq!(wedge2(&d.transpose()).unwrap(), wedge2(&d).unwrap());
        let same = PolyMatrix::parse(&r, &[&["d0", "d1", "d2"], &["d0", "d1", "d2"]]).unwrap();
        assert!(wedge2(&same).unwrap().is_zero());
        assert!(wedge2(&PolyMatrix::identity(&r, 3)).is_err());
    }

    #[test]
    fn determinant_examples() {
        let r = Ring::of(&["a", "b", "c", "d", "e", "f", "g", "h", "i"]);
        let (d, adj, tr) = det_adj_trace(&PolyMatrix::identity(&r, 3)).unwrap();
        assert_eq!(d, Polynomial::one(&r));
        assert_eq!(adj, PolyMatrix::identity(&r, 3));
        assert_eq!(tr, Polynomial::constant(&r, 3));
        let m2 = PolyMatrix::parse(&r, &[&["a", "b"], &["c", "d"]]).unwrap();
        assert_eq!(det(&m2).unwrap(), Polynomial::parse(&r, "a*d - b*c").unwrap());
        let m3 = PolyMatrix::parse(&r, &[&["a", "b", "c"], &["d", "e", "f"], &["g", "h", "i"]]).unwrap();
        let (d, adj, _) = det_adj_trace(&m3).unwrap();
        let prod = m3.mul(&adj).unwrap();
        assert_eq!(prod, PolyMatrix::identity(&r, 3).scale_poly(&d));
        assert!(det_adj_trace(&PolyMatrix::identity(&r, 4)).is_err());
    }

    #[test]
    fn pfaffian_examples() {
        let r = Ring::of(&["a", "b", "c", "d", "e", "f"]);
        let s = PolyMatrix::parse(
            &r,
            &[&["0", "a", "b", "c"], &["-a", "0", "d", "e"], &["-b", "-d", "0", "f"], &["-c", "-e", "-f", "0"]],
        )
        .unwrap();
        let pf = pfaffian(&s).unwrap();
        assert_eq!(pf, Polynomial::parse(&r, "a*f - b*e + c*d").unwrap());
        assert_eq!(pf.pow(2), det(&s).unwrap());
        assert!(pfaffians_4x4(&PolyMatrix::zeros(&r, 5, 5)).unwrap().iter().all(|p| p.is_zero()));
        let not_skew = PolyMatrix::identity(&r, 5);
        assert!(matches!(pfaffians_4x4(&not_skew), Err(LinalgError::NotSkew)));
    }
}
