use exact_arith::{Polynomial, Rational, Ring};
use poly_linalg::PolyVector;

use crate::FtsError;

/// An element `(s, t, x, y)` of the 8-dimensional space `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct FtsPoint {
    pub s: Polynomial,
    pub t: Polynomial,
    pub x: PolyVector,
    pub y: PolyVector,
}

/// Names `s, t, x1, x2, x3, y1, y2, y3` with a prefix.
pub fn point_names(prefix: &str) -> [String; 8] {
    ["s", "t", "x1", "x2", "x3", "y1", "y2", "y3"].map(|n| format!("{prefix}{n}"))
}

impl FtsPoint {
    pub fn new(s: Polynomial, t: Polynomial, x: PolyVector, y: PolyVector) -> Result<Self, FtsError> {
        let r = s.ring();
        if !t.ring().same(r) || !x.ring().same(r) || !y.ring().same(r) {
            return Err(FtsError::RingMismatch);
        }
        if x.len() != 3 || y.len() != 3 {
            return Err(FtsError::Shape);
        }
        Ok(FtsPoint { s, t, x, y })
    }

    pub fn zero(ring: &Ring) -> Self {
        FtsPoint {
            s: Polynomial::zero(ring),
            t: Polynomial::zero(ring),
            x: PolyVector::zeros(ring, 3),
            y: PolyVector::zeros(ring, 3),
        }
    }

    /// Point whose coordinates are the variables of [`point_names`]`(prefix)`.
    pub fn symbolic(ring: &Ring, prefix: &str) -> Result<Self, FtsError> {
        let n = point_names(prefix);
        let c: Vec<Polynomial> = n.iter().map(|v| Polynomial::var(ring, v)).collect::<Result<_, _>>()?;
        Ok(Self::from_components(ring, &c))
    }

    /// The standard basis vector with index `k` in the order `s, t, x1..x3, y1..y3`.
    pub fn basis(ring: &Ring, k: usize) -> Self {
        let mut c = vec![Polynomial::zero(ring); 8];
        c[k] = Polynomial::one(ring);
        Self::from_components(ring, &c)
    }

    pub fn e_s(ring: &Ring) -> Self {
        Self::basis(ring, 0)
    }

    pub fn e_t(ring: &Ring) -> Self {
        Self::basis(ring, 1)
    }

    pub fn from_x(x: &PolyVector) -> Self {
        let mut p = Self::zero(x.ring());
        p.x = x.clone();
        p
    }

    pub fn from_y(y: &PolyVector) -> Self {
        let mut p = Self::zero(y.ring());
        p.y = y.clone();
        p
    }

    pub fn from_rationals(ring: &Ring, c: &[Rational; 8]) -> Self {
        let v: Vec<Polynomial> = c.iter().map(|a| Polynomial::constant(ring, a.clone())).collect();
        Self::from_components(ring, &v)
    }

    pub fn from_components(ring: &Ring, c: &[Polynomial]) -> Self {
        assert_eq!(c.len(), 8);
        FtsPoint {
            s: c[0].clone(),
            t: c[1].clone(),
            x: PolyVector::new(ring, c[2..5].to_vec()).expect("shared ring"),
            y: PolyVector::new(ring, c[5..8].to_vec()).expect("shared ring"),
        }
    }

    pub fn components(&self) -> Vec<Polynomial> {
        let mut v = vec![self.s.clone(), self.t.clone()];
        v.extend(self.x.iter().cloned());
        v.extend(self.y.iter().cloned());
        v
    }

    pub fn ring(&self) -> &Ring {
        self.s.ring()
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_zero() && self.t.is_zero() && self.x.is_zero() && self.y.is_zero()
    }

    /// Total number of terms over all eight components.
    pub fn nterms(&self) -> usize {
        self.components().iter().map(|c| c.nterms()).sum()
    }

    pub fn add(&self, o: &FtsPoint) -> FtsPoint {
        FtsPoint { s: &self.s + &o.s, t: &self.t + &o.t, x: &self.x + &o.x, y: &self.y + &o.y }
    }

    pub fn sub(&self, o: &FtsPoint) -> FtsPoint {
        FtsPoint { s: &self.s - &o.s, t: &self.t - &o.t, x: &self.x - &o.x, y: &self.y - &o.y }
    }

    pub fn scale(&self, c: &Rational) -> FtsPoint {
        FtsPoint { s: self.s.scale(c), t: self.t.scale(c), x: self.x.scale(c), y: self.y.scale(c) }
    }

    pub fn scale_poly(&self, f: &Polynomial) -> FtsPoint {
        FtsPoint { s: &self.s * f, t: &self.t * f, x: self.x.scale_poly(f), y: self.y.scale_poly(f) }
    }

    pub fn map(&self, f: impl Fn(&Polynomial) -> Polynomial) -> FtsPoint {
        FtsPoint { s: f(&self.s), t: f(&self.t), x: self.x.map(&f), y: self.y.map(&f) }
    }

    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> FtsPoint {
        self.map(|c| c.substitute(target, images))
    }

    pub fn embed(&self, target: &Ring) -> Result<FtsPoint, FtsError> {
        let c = self.components().iter().map(|c| c.embed_partial(target)).collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_components(target, &c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn components_round_trip() {
        let r = Ring::new(&point_names("")).unwrap();
        let p = FtsPoint::symbolic(&r, "").unwrap();
        assert_eq!(p.components()[4].to_string(), "x3");
        assert_eq!(FtsPoint::from_components(&r, &p.components()), p);
        assert!(p.sub(&p).is_zero());
        assert_eq!(FtsPoint::e_t(&r).t, Polynomial::one(&r));
    }
}
