use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::{ArithError, Monomial, Rational, Ring};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in descending grevlex order with no zero coefficients,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

/// Sums of scaled monomials collected in a hash map, flushed once.
pub struct Accumulator {
    ring: Ring,
    map: HashMap<Monomial, Rational>,
}

impl Accumulator {
    pub fn new(ring: &Ring) -> Self {
        Accumulator { ring: ring.clone(), map: HashMap::new() }
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.map.get_mut(&m) {
            Some(v) => *v += &c,
            None => {
                self.map.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, p: &Polynomial, c: &Rational, m: Option<&Monomial>) {
        debug_assert!(p.ring.same(&self.ring));
        for (pm, pc) in &p.terms {
            let mm = match m {
                Some(m) => pm.mul(m),
                None => pm.clone(),
            };
            self.add_term(mm, pc * c);
        }
    }

    pub fn add(&mut self, p: &Polynomial) {
        for (pm, pc) in &p.terms {
            self.add_term(pm.clone(), pc.clone());
        }
    }

    pub fn finish(self) -> Polynomial {
        Polynomial::from_map(&self.ring, self.map)
    }
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: impl Into<Rational>) -> Self {
        let c = c.into();
        let terms = if c.is_zero() { vec![] } else { vec![(Monomial::one(ring.nvars()), c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self, ArithError> {
        Ok(Self::var_index(ring, ring.require(name)?))
    }

    /// Panicking variant of [`Polynomial::var`] for names known to exist.
    pub fn v(ring: &Ring, name: &str) -> Self {
        Self::var(ring, name).unwrap_or_else(|e| panic!("{e}"))
    }

    pub fn var_index(ring: &Ring, i: usize) -> Self {
        Polynomial { ring: ring.clone(), terms: vec![(Monomial::var(ring.nvars(), i), Rational::one())] }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars());
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc = Accumulator::new(ring);
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            acc.add_term(m, c);
        }
        acc.finish()
    }

    fn from_map(ring: &Ring, map: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds from terms already sorted descending, merging equal monomials.
    fn from_sorted(ring: &Ring, sorted: Vec<(Monomial, Rational)>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> = Vec::with_capacity(sorted.len());
        for (m, c) in sorted {
            match terms.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => {
                    if let Some((_, lc)) = terms.last() {
                        if lc.is_zero() {
                            terms.pop();
                        }
                    }
                    terms.push((m, c));
                }
            }
        }
        if let Some((_, lc)) = terms.last() {
            if lc.is_zero() {
                terms.pop();
            }
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Coefficient of the constant term.
    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|(tm, _)| m.cmp(tm)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn weighted_degree(&self, w: &[u32]) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.weighted_degree(w)).max()
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(m, _)| m.exp(var)).max().unwrap_or(0)
    }

    pub fn leading_term(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// Indices of variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let n = self.ring.nvars();
        let mut used = vec![false; n];
        for (m, _) in &self.terms {
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    used[i] = true;
                }
            }
        }
        (0..n).filter(|&i| used[i]).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(t, _)| t.degree() == m.degree()),
        }
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), ArithError> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(ArithError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, ArithError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, ArithError> {
        self.check_ring(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0.clone(), c));
        }
        Polynomial { ring: self.ring.clone(), terms: out }
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let n = self.terms.len() * other.terms.len();
        if n <= 4096 {
            let mut v = Vec::with_capacity(n);
            for (am, ac) in &self.terms {
                for (bm, bc) in &other.terms {
                    v.push((am.mul(bm), ac * bc));
                }
            }
            v.sort_unstable_by(|a, b| b.0.cmp(&a.0));
            Polynomial::from_sorted(&self.ring, v)
        } else {
            let mut acc = Accumulator::new(&self.ring);
            for (am, ac) in &self.terms {
                for (bm, bc) in &other.terms {
                    acc.add_term(am.mul(bm), ac * bc);
                }
            }
            acc.finish()
        }
    }

    /// Multiplication by a single term; order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(tm, tc)| (tm.mul(m), tc * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, tc)| (m.clone(), tc * c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale_i(&self, c: i64) -> Polynomial {
        self.scale(&Rational::from(c))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Partial derivative with respect to variable index `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(i) > 0)
            .map(|(m, c)| {
                let e = m.exp(i);
                (m.with_exp(i, e - 1), c * &Rational::from(e as i64))
            })
            .collect::<Vec<_>>();
        Polynomial::from_terms(&self.ring, terms)
    }

    pub fn derivative_by(&self, name: &str) -> Result<Polynomial, ArithError> {
        Ok(self.derivative(self.ring.require(name)?))
    }

    /// `Σ direction[i] · ∂f/∂at[i]`, both given as variable names of this ring.
    pub fn directional_derivative<S: AsRef<str>>(
        &self,
        direction: &[S],
        at: &[S],
    ) -> Result<Polynomial, ArithError> {
        if direction.len() != at.len() {
            return Err(ArithError::BlockMismatch);
        }
        let mut acc = Accumulator::new(&self.ring);
        for (d, a) in direction.iter().zip(at) {
            let di = self.ring.require(d.as_ref())?;
            let ai = self.ring.require(a.as_ref())?;
            if di == ai || at.iter().any(|x| x.as_ref() == d.as_ref()) {
                return Err(ArithError::BlockMismatch);
            }
            let dv = Monomial::var(self.ring.nvars(), di);
            acc.add_scaled(&self.derivative(ai), &Rational::one(), Some(&dv));
        }
        Ok(acc.finish())
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.ring.nvars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= &point[i].pow(e as u32);
                }
            }
            total += &t;
        }
        total
    }

    /// Ring homomorphism into `target` sending variable `i` to `images[i]`.
    pub fn substitute(&self, target: &Ring, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut acc = Accumulator::new(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                if pw.is_empty() {
                    pw.push(Polynomial::one(target));
                }
                while pw.len() <= e as usize {
                    let next = pw.last().unwrap() * &images[i];
                    pw.push(next);
                }
                term = &term * &pw[e as usize];
                if term.is_zero() {
                    break;
                }
            }
            acc.add(&term);
        }
        acc.finish()
    }

    /// Substitutes the named variables inside the same ring, keeping the rest.
    pub fn subs(&self, map: &[(&str, Polynomial)]) -> Result<Polynomial, ArithError> {
        let mut images: Vec<Polynomial> =
            (0..self.ring.nvars()).map(|i| Polynomial::var_index(&self.ring, i)).collect();
        for (name, p) in map {
            self.check_ring(p)?;
            images[self.ring.require(name)?] = p.clone();
        }
        Ok(self.substitute(&self.ring, &images))
    }

    /// Sets the named variables to rational values.
    pub fn subs_values(&self, map: &[(&str, Rational)]) -> Result<Polynomial, ArithError> {
        let m: Vec<(&str, Polynomial)> =
            map.iter().map(|(n, c)| (*n, Polynomial::constant(&self.ring, c.clone()))).collect();
        self.subs(&m)
    }

    /// Re-expresses this polynomial in `target`, matching variables by name.
    pub fn embed(&self, target: &Ring) -> Result<Polynomial, ArithError> {
        if self.ring.same(target) {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .ring
            .names()
            .iter()
            .map(|n| target.require(n))
            .collect::<Result<_, _>>()?;
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; n];
            for (i, &x) in m.exps().iter().enumerate() {
                e[map[i]] += x;
            }
            (Monomial::from_exps(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Like [`Polynomial::embed`] but only variables that occur must exist in `target`.
    pub fn embed_partial(&self, target: &Ring) -> Result<Polynomial, ArithError> {
        if self.ring.same(target) {
            return Ok(self.clone());
        }
        let used = self.variables();
        let mut map = vec![usize::MAX; self.ring.nvars()];
        for &i in &used {
            map[i] = target.require(self.ring.name(i))?;
        }
        let n = target.nvars();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u16; n];
            for &i in &used {
                e[map[i]] += m.exp(i);
            }
            (Monomial::from_exps(e), c.clone())
        });
        Ok(Polynomial::from_terms(target, terms))
    }

    /// Exact quotient `self / g`, or `NotDivisible`.
    pub fn exact_divide(&self, g: &Polynomial) -> Result<Polynomial, ArithError> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Err(ArithError::DivideByZero);
        }
        let (lm, lc) = g.terms[0].clone();
        let mut rem = self.clone();
        let mut q = Accumulator::new(&self.ring);
        while let Some((rm, rc)) = rem.terms.first().cloned() {
            if !lm.divides(&rm) {
                return Err(ArithError::NotDivisible);
            }
            let qm = lm.quotient_of(&rm);
            let qc = &rc / &lc;
            rem = rem.merge(&g.mul_term(&qm, &qc), true);
            q.add_term(qm, qc);
        }
        Ok(q.finish())
    }

    /// Multivariate division by one divisor: returns `(q, r)` with
    /// `self = q·g + r` and no term of `r` divisible by the leading monomial of `g`.
    pub fn div_rem(&self, g: &Polynomial) -> Result<(Polynomial, Polynomial), ArithError> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Err(ArithError::DivideByZero);
        }
        let (lm, lc) = g.terms[0].clone();
        let mut p = self.clone();
        let mut q = Accumulator::new(&self.ring);
        let mut r: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((pm, pc)) = p.terms.first().cloned() {
            if lm.divides(&pm) {
                let qm = lm.quotient_of(&pm);
                let qc = &pc / &lc;
                p = p.merge(&g.mul_term(&qm, &qc), true);
                q.add_term(qm, qc);
            } else {
                p.terms.remove(0);
                r.push((pm, pc));
            }
        }
        Ok((q.finish(), Polynomial { ring: self.ring.clone(), terms: r }))
    }

    /// Groups terms by their exponents on the variables in `block`.
    /// Returns `(block exponents, coefficient polynomial)` pairs, the coefficient
    /// free of block variables, in descending order of the block exponent monomial.
    pub fn coefficients_in(&self, block: &[usize]) -> Vec<(Vec<u16>, Polynomial)> {
        let mut groups: HashMap<Vec<u16>, Vec<(Monomial, Rational)>> = HashMap::new();
        for (m, c) in &self.terms {
            let key: Vec<u16> = block.iter().map(|&i| m.exp(i)).collect();
            let mut rest = m.clone();
            for &i in block {
                rest = rest.with_exp(i, 0);
            }
            groups.entry(key).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<(Vec<u16>, Polynomial)> = groups
            .into_iter()
            .map(|(k, ts)| (k, Polynomial::from_terms(&self.ring, ts)))
            .collect();
        out.sort_by(|a, b| {
            Monomial::from_exps(b.0.clone()).cmp(&Monomial::from_exps(a.0.clone()))
        });
        out
    }

    /// Coefficient of `Π block[i]^exps[i]` as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, block: &[usize], exps: &[u16]) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            if block.iter().zip(exps).all(|(&i, &e)| m.exp(i) == e) {
                let mut rest = m.clone();
                for &i in block {
                    rest = rest.with_exp(i, 0);
                }
                Some((rest, c.clone()))
            } else {
                None
            }
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Scales so the leading coefficient is 1; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip().expect("nonzero")),
        }
    }

    /// Integer coefficients with gcd 1 and positive leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        use num_integer::Integer;
        use num_bigint::BigInt;
        use num_traits::{One, Zero};
        if self.is_zero() {
            return self.clone();
        }
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            let v = c.numer() * (&l / c.denom());
            g = g.gcd(&v);
        }
        let mut s = Rational::new(l, g).expect("nonzero");
        if self.terms[0].1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(ring: &Ring, s: &str) -> Result<Polynomial, ArithError> {
        crate::parse::parse_polynomial(ring, s)
    }
}

pub(crate) fn write_monomial(
    f: &mut impl fmt::Write,
    names: &[String],
    exps: impl Iterator<Item = (usize, i32)>,
) -> fmt::Result {
    let mut first = true;
    for (i, e) in exps {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        f.write_str(&names[i])?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Writes one term with its sign handled by the caller-provided position.
pub(crate) fn write_term(
    f: &mut impl fmt::Write,
    first: bool,
    c: &Rational,
    is_unit_monomial: bool,
    mono: &str,
) -> fmt::Result {
    let neg = c.is_negative();
    let a = c.abs();
    if first {
        if neg {
            f.write_char('-')?;
        }
    } else if neg {
        f.write_str(" - ")?;
    } else {
        f.write_str(" + ")?;
    }
    if is_unit_monomial {
        write!(f, "{a}")
    } else if a.is_one() {
        f.write_str(mono)
    } else {
        write!(f, "{a}*{mono}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = self.ring.names();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            write_monomial(&mut mono, names, m.exps().iter().enumerate().map(|(i, &e)| (i, e as i32)))?;
            write_term(f, k == 0, c, m.is_one(), &mono)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    /// Panics on ring mismatch; see [`Polynomial::try_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ring mismatch in add")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ring mismatch in sub")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ring mismatch in mul")
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Which arithmetic operation [`poly_arith`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial, ArithError> {
    match op {
        ArithOp::Add => a.try_add(b),
        ArithOp::Sub => a.try_sub(b),
        ArithOp::Mul => a.try_mul(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::of(&["x", "y", "z"])
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(&ring(), s).unwrap()
    }

    #[test]
    fn basic_examples() {
        assert_eq!(&p("x+y") + &p("x-y"), p("2*x"));
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        let big = p("(x+y+z+1)^4");
        assert!(big.nterms() >= 20);
        assert!((&Polynomial::zero(&ring()) * &big).is_zero());
    }

    #[test]
    fn ring_mismatch() {
        let other = Ring::of(&["x", "y"]);
        let a = Polynomial::v(&other, "x");
        assert_eq!(poly_arith(&a, &p("x"), ArithOp::Add), Err(ArithError::RingMismatch));
    }

    #[test]
    fn canonical_text() {
        let r = Ring::of(&["x1", "x2", "x3"]);
        let f = Polynomial::parse(&r, "x3*x1*(-27)*x2").unwrap();
        assert_eq!(f.to_string(), "-27*x1*x2*x3");
        assert_eq!(p("y^2 - x*z + 1/3*x - 2").to_string(), "y^2 - x*z + 1/3*x - 2");
        assert_eq!(Polynomial::zero(&ring()).to_string(), "0");
    }

    #[test]
    fn exact_division() {
        assert_eq!(p("x^2-y^2").exact_divide(&p("x-y")).unwrap(), p("x+y"));
        assert_eq!(p("x^2+y^2").exact_divide(&p("x-y")), Err(ArithError::NotDivisible));
        assert_eq!(p("x").exact_divide(&p("0")), Err(ArithError::DivideByZero));
        let r = Ring::of(&["x1", "x2", "x3"]);
        let f = Polynomial::parse(&r, "-27*x1^2*x2*x3").unwrap();
        let g = Polynomial::v(&r, "x1");
        let q = f.exact_divide(&g).unwrap();
        assert_eq!(q.to_string(), "-27*x1*x2*x3");
        assert_eq!(&q * &g, f);
    }

    #[test]
    fn derivatives() {
        let r = Ring::of(&["x1", "x2", "x3", "u1", "u2", "u3"]);
        let f = Polynomial::parse(&r, "x1*x2*x3").unwrap();
        let d = f.directional_derivative(&["u1", "u2", "u3"], &["x1", "x2", "x3"]).unwrap();
        assert_eq!(d, Polynomial::parse(&r, "u1*x2*x3 + x1*u2*x3 + x1*x2*u3").unwrap());
        let g = Polynomial::parse(&r, "x1^2").unwrap();
        let d = g.directional_derivative(&["u1"], &["x1"]).unwrap();
        assert_eq!(d, Polynomial::parse(&r, "2*u1*x1").unwrap());
        assert_eq!(
            g.directional_derivative(&["u1", "u2"], &["x1"]),
            Err(ArithError::BlockMismatch)
        );
    }

    #[test]
    fn division_with_remainder() {
        let r = Ring::of(&["a", "b", "c", "d", "x"]);
        let g = Polynomial::parse(&r, "a*d - b*c - 1").unwrap();
        let f = &g * &Polynomial::parse(&r, "a+b").unwrap();
        assert!(f.div_rem(&g).unwrap().1.is_zero());
        let a = Polynomial::v(&r, "a");
        assert_eq!(a.div_rem(&g).unwrap().1, a);
        let m = Polynomial::parse(&r, "a^2*b - 3*c*d + 7").unwrap();
        let x = Polynomial::v(&r, "x");
        let f = &(&g * &m) + &x;
        let (q, rem) = f.div_rem(&g).unwrap();
        assert_eq!(rem, x);
        assert_eq!(q, m);
    }

    #[test]
    fn coefficient_extraction() {
        let f = p("3*x^2*y + x*z - 5*y + 2");
        let by_x = f.coefficients_in(&[0]);
        assert_eq!(by_x.len(), 3);
        assert_eq!(by_x[0].0, vec![2]);
        assert_eq!(by_x[0].1, p("3*y"));
        assert_eq!(f.coefficient_of(&[0], &[0]), p("-5*y+2"));
    }

    #[test]
    fn substitution_and_embedding() {
        let f = p("x*y + z");
        let g = f.subs(&[("x", p("y+1")), ("z", p("0"))]).unwrap();
        assert_eq!(g, p("y^2+y"));
        let big = Ring::of(&["w", "z", "y", "x"]);
        let e = f.embed(&big).unwrap();
        assert_eq!(e.to_string(), "y*x + z");
        assert!(e.embed(&ring()).is_err());
        assert_eq!(e.embed_partial(&ring()).unwrap(), f);
    }

    #[test]
    fn primitive_and_monic() {
        let f = p("-2/3*x + 4/9*y");
        assert_eq!(f.primitive(), p("3*x - 2*y"));
        assert_eq!(f.monic(), p("x - 2/3*y"));
    }
}
