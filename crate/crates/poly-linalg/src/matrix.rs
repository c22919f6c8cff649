use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use exact_arith::{ArithError, Polynomial, Rational, Ring};

use crate::LinalgError;

/// Fixed-length vector of polynomials over one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyVector {
    ring: Ring,
    entries: Vec<Polynomial>,
}

impl PolyVector {
    pub fn new(ring: &Ring, entries: Vec<Polynomial>) -> Result<Self, LinalgError> {
        if entries.iter().any(|e| !e.ring().same(ring)) {
            return Err(ArithError::RingMismatch.into());
        }
        Ok(PolyVector { ring: ring.clone(), entries })
    }

    /// Builds from entries, taking the ring of the first. Panics when empty or mixed.
    pub fn from_vec(entries: Vec<Polynomial>) -> Self {
        let ring = entries[0].ring().clone();
        PolyVector::new(&ring, entries).expect("entries share a ring")
    }

    pub fn zeros(ring: &Ring, n: usize) -> Self {
        PolyVector { ring: ring.clone(), entries: vec![Polynomial::zero(ring); n] }
    }

    pub fn from_vars<S: AsRef<str>>(ring: &Ring, names: &[S]) -> Result<Self, LinalgError> {
        let entries = names
            .iter()
            .map(|n| Polynomial::var(ring, n.as_ref()))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyVector { ring: ring.clone(), entries })
    }

    pub fn from_constants(ring: &Ring, values: &[Rational]) -> Self {
        let entries = values.iter().map(|c| Polynomial::constant(ring, c.clone())).collect();
        PolyVector { ring: ring.clone(), entries }
    }

    pub fn parse(ring: &Ring, texts: &[&str]) -> Result<Self, LinalgError> {
        let entries = texts
            .iter()
            .map(|t| Polynomial::parse(ring, t))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyVector { ring: ring.clone(), entries })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Polynomial> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Polynomial> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Self {
        self.map(|e| e * p)
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyVector { ring: self.ring.clone(), entries: self.entries.iter().map(f).collect() }
    }

    pub fn dot(&self, other: &PolyVector) -> Polynomial {
        assert_eq!(self.len(), other.len(), "dot of unequal lengths");
        let mut acc = Polynomial::zero(&self.ring);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc = &acc + &(a * b);
            }
        }
        acc
    }

    pub fn embed(&self, target: &Ring) -> Result<Self, LinalgError> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.embed_partial(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(PolyVector { ring: target.clone(), entries })
    }

    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Self {
        PolyVector {
            ring: target.clone(),
            entries: self.entries.iter().map(|e| e.substitute(target, images)).collect(),
        }
    }

    pub fn subs(&self, map: &[(&str, Polynomial)]) -> Result<Self, LinalgError> {
        let entries = self.entries.iter().map(|e| e.subs(map)).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyVector { ring: self.ring.clone(), entries })
    }

    pub fn as_column(&self) -> PolyMatrix {
        PolyMatrix { ring: self.ring.clone(), rows: self.len(), cols: 1, data: self.entries.clone() }
    }

    pub fn as_row(&self) -> PolyMatrix {
        PolyMatrix { ring: self.ring.clone(), rows: 1, cols: self.len(), data: self.entries.clone() }
    }
}

impl Index<usize> for PolyVector {
    type Output = Polynomial;
    fn index(&self, i: usize) -> &Polynomial {
        &self.entries[i]
    }
}

impl Add for &PolyVector {
    type Output = PolyVector;
    fn add(self, o: &PolyVector) -> PolyVector {
        assert_eq!(self.len(), o.len());
        PolyVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PolyVector {
    type Output = PolyVector;
    fn sub(self, o: &PolyVector) -> PolyVector {
        assert_eq!(self.len(), o.len());
        PolyVector {
            ring: self.ring.clone(),
            entries: self.entries.iter().zip(&o.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &PolyVector {
    type Output = PolyVector;
    fn neg(self) -> PolyVector {
        self.map(|e| -e)
    }
}

impl fmt::Debug for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.entries.iter()).finish()
    }
}

/// Dense row-major matrix of polynomials over one ring.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    data: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn from_rows(ring: &Ring, rows: Vec<Vec<Polynomial>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::ShapeError("ragged rows".into()));
        }
        let data: Vec<Polynomial> = rows.into_iter().flatten().collect();
        if data.iter().any(|e| !e.ring().same(ring)) {
            return Err(ArithError::RingMismatch.into());
        }
        Ok(PolyMatrix { ring: ring.clone(), rows: r, cols: c, data })
    }

    pub fn parse(ring: &Ring, rows: &[&[&str]]) -> Result<Self, LinalgError> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|t| Polynomial::parse(ring, t)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(ring, rows)
    }

    pub fn from_fn(ring: &Ring, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Polynomial) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        PolyMatrix { ring: ring.clone(), rows, cols, data }
    }

    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Self::from_fn(ring, rows, cols, |_, _| Polynomial::zero(ring))
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| {
            if i == j { Polynomial::one(ring) } else { Polynomial::zero(ring) }
        })
    }

    pub fn from_columns(cols: &[PolyVector]) -> Self {
        let ring = cols[0].ring().clone();
        let n = cols[0].len();
        Self::from_fn(&ring, n, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        assert!(p.ring().same(&self.ring));
        self.data[i * self.cols + j] = p;
    }

    pub fn row(&self, i: usize) -> PolyVector {
        PolyVector { ring: self.ring.clone(), entries: self.data[i * self.cols..(i + 1) * self.cols].to_vec() }
    }

    pub fn column(&self, j: usize) -> PolyVector {
        PolyVector { ring: self.ring.clone(), entries: (0..self.rows).map(|i| self.get(i, j).clone()).collect() }
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.ring, self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &PolyMatrix) -> Result<Self, LinalgError> {
        if self.cols != o.rows {
            return Err(LinalgError::ShapeError(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(Self::from_fn(&self.ring, self.rows, o.cols, |i, j| {
            let mut acc = Polynomial::zero(&self.ring);
            for k in 0..self.cols {
                let (a, b) = (self.get(i, k), o.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        }))
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &PolyVector) -> PolyVector {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        PolyVector {
            ring: self.ring.clone(),
            entries: (0..self.rows).map(|i| self.row(i).dot(v)).collect(),
        }
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &PolyVector) -> PolyVector {
        assert_eq!(self.rows, v.len(), "vector-matrix shape");
        PolyVector {
            ring: self.ring.clone(),
            entries: (0..self.cols).map(|j| self.column(j).dot(v)).collect(),
        }
    }

    /// `ᵗa · M · b`.
    pub fn bilinear(&self, a: &PolyVector, b: &PolyVector) -> Polynomial {
        a.dot(&self.mul_vec(b))
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn scale_poly(&self, p: &Polynomial) -> Self {
        self.map(|e| e * p)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_skew(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.get(i, i).is_zero() && (0..i).all(|j| *self.get(i, j) == -self.get(j, i))
            })
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(&self.ring, rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn embed(&self, target: &Ring) -> Result<Self, LinalgError> {
        let data = self.data.iter().map(|e| e.embed_partial(target)).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { ring: target.clone(), rows: self.rows, cols: self.cols, data })
    }

    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Self {
        PolyMatrix {
            ring: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|e| e.substitute(target, images)).collect(),
        }
    }

    pub fn subs(&self, map: &[(&str, Polynomial)]) -> Result<Self, LinalgError> {
        let data = self.data.iter().map(|e| e.subs(map)).collect::<Result<Vec<_>, _>>()?;
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, data })
    }

    /// Entries as rationals when all are constant.
    pub fn to_rationals(&self) -> Option<Vec<Vec<Rational>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).constant_value()).collect())
            .collect()
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.shape(), o.shape());
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, o: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.shape(), o.shape());
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &PolyMatrix {
    type Output = PolyMatrix;
    fn neg(self) -> PolyMatrix {
        self.map(|e| -e)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect()).collect();
        write!(f, "{rows:?}")
    }
}
