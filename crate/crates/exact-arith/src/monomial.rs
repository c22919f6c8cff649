use std::cmp::Ordering;

/// Exponent vector of a monomial, with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    deg: u32,
    exps: Box<[u16]>,
}

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial { deg: 0, exps: vec![0; n].into_boxed_slice() }
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut e = vec![0u16; n];
        e[i] = 1;
        Monomial { deg: 1, exps: e.into_boxed_slice() }
    }

    pub fn from_exps(exps: Vec<u16>) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps: exps.into_boxed_slice() }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u16]> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial { deg: self.deg + other.deg, exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps: Box<[u16]> = other
            .exps
            .iter()
            .zip(self.exps.iter())
            .map(|(a, b)| a - b)
            .collect();
        Monomial { deg: other.deg - self.deg, exps }
    }

    pub fn with_exp(&self, i: usize, e: u16) -> Monomial {
        let mut exps = self.exps.clone();
        let old = exps[i];
        exps[i] = e;
        Monomial { deg: self.deg - old as u32 + e as u32, exps }
    }

    /// Weighted degree under integer weights.
    pub fn weighted_degree(&self, w: &[u32]) -> u32 {
        self.exps.iter().zip(w).map(|(&e, &w)| e as u32 * w).sum()
    }
}

impl Ord for Monomial {
    /// Graded reverse lexicographic order.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.deg.cmp(&other.deg) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.exps.iter().zip(other.exps.iter()).rev() {
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o.reverse(),
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exps(e.to_vec())
    }

    #[test]
    fn grevlex() {
        // x > y > z, degree first, then reverse lex
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 1, 0]) > m(&[0, 0, 1]));
        assert!(m(&[0, 0, 2]) > m(&[1, 0, 0]));
        // xz vs y^2: grevlex puts y^2 above xz
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[2, 0, 0]) > m(&[0, 2, 0]));
        assert_eq!(m(&[1, 1, 0]).cmp(&m(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn division() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 3, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient_of(&b), m(&[1, 1, 1]));
        assert_eq!(a.mul(&a.quotient_of(&b)), b);
    }
}
