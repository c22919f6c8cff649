use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::poly::{write_monomial, write_term};
use crate::{ArithError, Monomial, Polynomial, Rational, Ring};

/// Polynomial in which one distinguished variable `r` may carry negative exponents.
///
/// Stored as `r^low · body` where `body` is an ordinary polynomial not divisible
/// by `r` (or zero, with `low = 0`). This keeps the representation canonical.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    r: usize,
    low: i32,
    body: Polynomial,
}

impl LaurentPolynomial {
    /// Wraps an ordinary polynomial; `r` names the distinguished variable.
    pub fn from_polynomial(p: &Polynomial, r: &str) -> Result<Self, ArithError> {
        let r = p.ring().require(r)?;
        Ok(Self::normalized(r, 0, p.clone()))
    }

    pub fn zero(ring: &Ring, r: &str) -> Result<Self, ArithError> {
        Self::from_polynomial(&Polynomial::zero(ring), r)
    }

    pub fn constant(ring: &Ring, r: &str, c: Rational) -> Result<Self, ArithError> {
        Self::from_polynomial(&Polynomial::constant(ring, c), r)
    }

    pub fn var(ring: &Ring, r: &str, name: &str) -> Result<Self, ArithError> {
        Self::from_polynomial(&Polynomial::var(ring, name)?, r)
    }

    /// `c · r^k`.
    pub fn r_power(ring: &Ring, r: &str, k: i32, c: Rational) -> Result<Self, ArithError> {
        let ri = ring.require(r)?;
        Ok(Self::normalized(ri, k, Polynomial::constant(ring, c)))
    }

    fn normalized(r: usize, low: i32, body: Polynomial) -> Self {
        if body.is_zero() {
            return LaurentPolynomial { r, low: 0, body };
        }
        let m = body.terms().iter().map(|(m, _)| m.exp(r)).min().unwrap_or(0);
        if m == 0 {
            return LaurentPolynomial { r, low, body };
        }
        let ring = body.ring().clone();
        let terms = body.terms().iter().map(|(mm, c)| (mm.with_exp(r, mm.exp(r) - m), c.clone()));
        LaurentPolynomial { r, low: low + m as i32, body: Polynomial::from_terms(&ring, terms) }
    }

    pub fn ring(&self) -> &Ring {
        self.body.ring()
    }

    pub fn r_name(&self) -> &str {
        self.ring().name(self.r)
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn nterms(&self) -> usize {
        self.body.nterms()
    }

    /// Smallest and largest exponent of `r`; `None` for zero.
    pub fn r_exponent_range(&self) -> Option<(i32, i32)> {
        if self.is_zero() {
            return None;
        }
        Some((self.low, self.low + self.body.degree_in(self.r) as i32))
    }

    /// The ordinary polynomial when no negative `r`-exponent occurs.
    pub fn to_polynomial(&self) -> Option<Polynomial> {
        if self.low < 0 {
            return None;
        }
        let rv = Polynomial::var_index(self.ring(), self.r);
        Some(&self.body * &rv.pow(self.low as u32))
    }

    /// Terms as `(monomial without r, r-exponent, coefficient)` in display order.
    pub fn terms(&self) -> Vec<(Monomial, i32, Rational)> {
        self.body
            .terms()
            .iter()
            .map(|(m, c)| (m.with_exp(self.r, 0), m.exp(self.r) as i32 + self.low, c.clone()))
            .collect()
    }

    fn check(&self, o: &Self) -> Result<(), ArithError> {
        if self.ring().same(o.ring()) && self.r == o.r {
            Ok(())
        } else {
            Err(ArithError::RingMismatch)
        }
    }

    fn shifted_body(&self, to: i32) -> Polynomial {
        let k = (self.low - to) as u32;
        if k == 0 {
            return self.body.clone();
        }
        let rv = Polynomial::var_index(self.ring(), self.r);
        &self.body * &rv.pow(k)
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        if self.is_zero() {
            return Ok(o.clone());
        }
        if o.is_zero() {
            return Ok(self.clone());
        }
        let low = self.low.min(o.low);
        Ok(Self::normalized(self.r, low, &self.shifted_body(low) + &o.shifted_body(low)))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, ArithError> {
        self.try_add(&-o)
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self, ArithError> {
        self.check(o)?;
        Ok(Self::normalized(self.r, self.low + o.low, &self.body * &o.body))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.r, self.low, self.body.scale(c))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::normalized(self.r, self.low * e as i32, self.body.pow(e))
    }

    /// Inverse of a unit `c · r^k`.
    pub fn inverse(&self) -> Result<Self, ArithError> {
        match self.body.constant_value() {
            Some(c) if !c.is_zero() => Ok(Self::normalized(
                self.r,
                -self.low,
                Polynomial::constant(self.ring(), c.recip()?),
            )),
            _ => Err(ArithError::NotInvertible(self.to_string())),
        }
    }

    /// Integer power, negative exponents allowed for units.
    pub fn powi(&self, e: i32) -> Result<Self, ArithError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse()?.pow((-e) as u32))
        }
    }
}

/// Ring homomorphism on Laurent polynomials. Variables absent from `map` are sent
/// to the same-named variable of the target ring. The image of `r` must be a unit
/// whenever `f` has negative `r`-exponents.
pub fn laurent_substitute(
    f: &LaurentPolynomial,
    map: &[(&str, LaurentPolynomial)],
) -> Result<LaurentPolynomial, ArithError> {
    let (target, tr) = match map.first() {
        Some((_, img)) => (img.ring().clone(), img.r),
        None => return Ok(f.clone()),
    };
    let src = f.ring();
    let mut images: Vec<Option<LaurentPolynomial>> = vec![None; src.nvars()];
    for (name, img) in map {
        if !img.ring().same(&target) || img.r != tr {
            return Err(ArithError::RingMismatch);
        }
        images[src.require(name)?] = Some(img.clone());
    }
    let used: Vec<usize> = {
        let mut u = f.body.variables();
        if !u.contains(&f.r) && f.low != 0 {
            u.push(f.r);
        }
        u
    };
    for &i in &used {
        if images[i].is_none() {
            let name = src.name(i);
            let p = Polynomial::var(&target, name)?;
            images[i] = Some(LaurentPolynomial::normalized(tr, 0, p));
        }
    }
    let rimg = images[f.r].clone();
    let mut acc = LaurentPolynomial::normalized(tr, 0, Polynomial::zero(&target));
    for (m, c) in f.body.terms() {
        let mut t = LaurentPolynomial::normalized(tr, 0, Polynomial::constant(&target, c.clone()));
        for (i, &e) in m.exps().iter().enumerate() {
            if i == f.r || e == 0 {
                continue;
            }
            t = t.try_mul(&images[i].as_ref().unwrap().pow(e as u32))?;
        }
        let re = m.exp(f.r) as i32 + f.low;
        if re != 0 {
            let ri = rimg.as_ref().expect("r image present");
            t = t.try_mul(&ri.powi(re)?)?;
        }
        acc = acc.try_add(&t)?;
    }
    Ok(acc)
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names = self.ring().names();
        let r = self.r;
        let low = self.low;
        for (k, (m, c)) in self.body.terms().iter().enumerate() {
            let mut mono = String::new();
            let exps = m.exps().iter().enumerate().map(|(i, &e)| {
                if i == r { (i, e as i32 + low) } else { (i, e as i32) }
            });
            write_monomial(&mut mono, names, exps)?;
            write_term(f, k == 0, c, mono.is_empty(), &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_add(o).expect("ring mismatch")
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_sub(o).expect("ring mismatch")
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, o: &LaurentPolynomial) -> LaurentPolynomial {
        self.try_mul(o).expect("ring mismatch")
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial { r: self.r, low: self.low, body: -&self.body }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::of(&["r", "X1", "Y1"])
    }

    fn l(s: &str) -> LaurentPolynomial {
        LaurentPolynomial::from_polynomial(&Polynomial::parse(&ring(), s).unwrap(), "r").unwrap()
    }

    fn rinv() -> LaurentPolynomial {
        LaurentPolynomial::r_power(&ring(), "r", -1, Rational::one()).unwrap()
    }

    fn flip() -> Vec<(&'static str, LaurentPolynomial)> {
        vec![("r", -&l("r"))]
    }

    #[test]
    fn sign_flip() {
        let f = l("r*X1 + Y1");
        let g = laurent_substitute(&f, &flip()).unwrap();
        assert_eq!(g, l("-r*X1 + Y1"));
        let h = laurent_substitute(&rinv(), &flip()).unwrap();
        assert_eq!(h, -&rinv());
        assert_eq!(rinv().to_string(), "r^-1");
    }

    #[test]
    fn canonical_shift() {
        let a = &(&rinv() * &l("r^2*X1")) + &l("Y1");
        assert_eq!(a, l("r*X1 + Y1"));
        assert_eq!(a.r_exponent_range(), Some((0, 1)));
        let b = &rinv() * &l("X1 + r");
        assert_eq!(b.r_exponent_range(), Some((-1, 0)));
        assert_eq!(b.to_string(), "1 + r^-1*X1");
        assert!(b.to_polynomial().is_none());
        let c = &(&b * &l("r")) - &l("X1");
        assert_eq!(c, l("r"));
    }

    #[test]
    fn polynomial_round_trip() {
        let p = Polynomial::parse(&ring(), "r^3*X1 - 2*Y1^2 + 1/2").unwrap();
        let lp = LaurentPolynomial::from_polynomial(&p, "r").unwrap();
        assert_eq!(lp.to_polynomial().unwrap(), p);
    }
}
