use std::collections::HashMap;

use exact_arith::{Accumulator, Monomial, Polynomial, Rational, Ring};
use serde_json::{json, Value};

use crate::LinalgError;

/// Degree bookkeeping for cofactor enumeration.
///
/// `grading` assigns a degree to each ring variable (default 1); a product
/// `m·gᵢ` is admitted when its graded degree is at most `bound` and, if
/// `total_cap` is set, its ordinary total degree is at most the cap. The cap
/// keeps the search finite when some variables have grading 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBound {
    pub bound: u32,
    pub grading: Option<Vec<u32>>,
    pub total_cap: Option<u32>,
}

impl DegreeBound {
    pub fn total(bound: u32) -> Self {
        DegreeBound { bound, grading: None, total_cap: None }
    }

    pub fn graded(bound: u32, grading: Vec<u32>, total_cap: u32) -> Self {
        DegreeBound { bound, grading: Some(grading), total_cap: Some(total_cap) }
    }

    fn degree_of(&self, p: &Polynomial) -> Option<u32> {
        match &self.grading {
            None => p.total_degree(),
            Some(w) => p.weighted_degree(w),
        }
    }

    fn mono_degree(&self, m: &Monomial) -> u32 {
        match &self.grading {
            None => m.degree(),
            Some(w) => m.weighted_degree(w),
        }
    }
}

/// Evidence that `target = Σ cofactorᵢ · generatorᵢ`, or the record of a search
/// that found no such combination within the bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub target: Polynomial,
    pub generators: Vec<Polynomial>,
    pub degree_bound: u32,
    pub cofactors: Option<Vec<Polynomial>>,
}

impl MembershipCertificate {
    /// Re-expands the cofactors; `true` only when they reproduce the target exactly.
    pub fn verify(&self) -> bool {
        let Some(cs) = &self.cofactors else { return false };
        if cs.len() != self.generators.len() {
            return false;
        }
        let mut acc = Accumulator::new(self.target.ring());
        for (c, g) in cs.iter().zip(&self.generators) {
            acc.add(&(c * g));
        }
        acc.finish() == self.target
    }

    pub fn to_json(&self) -> Value {
        json!({
            "target": self.target.to_string(),
            "generators": self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "bound": self.degree_bound,
            "cofactors": self.cofactors.as_ref().map(|cs| cs.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
        })
    }

    /// Cofactors that are nonzero, with generator index.
    pub fn support(&self) -> Vec<usize> {
        match &self.cofactors {
            None => vec![],
            Some(cs) => (0..cs.len()).filter(|&i| !cs[i].is_zero()).collect(),
        }
    }

    /// Largest total degree among the cofactors.
    pub fn max_cofactor_degree(&self) -> Option<u32> {
        self.cofactors.as_ref()?.iter().filter_map(|c| c.total_degree()).max()
    }
}

struct EchelonRow {
    poly: Polynomial,
    label: usize,
    own: Rational,
    reductions: Vec<(usize, Rational)>,
}

/// Semi-echelon basis of the degree-bounded Macaulay matrix of a generator list.
/// Built once and reused for many targets.
pub struct MacaulayBasis {
    ring: Ring,
    generators: Vec<Polynomial>,
    bound: DegreeBound,
    labels: Vec<(usize, Monomial)>,
    rows: Vec<EchelonRow>,
    pivots: HashMap<Monomial, usize>,
}

impl MacaulayBasis {
    /// `extra_vars` lists variables (by index) that may appear in cofactors beyond
    /// those occurring in the generators; pass the variables of the targets.
    pub fn new(generators: &[Polynomial], bound: DegreeBound, extra_vars: &[usize]) -> Result<Self, LinalgError> {
        let ring = match generators.first() {
            Some(g) => g.ring().clone(),
            None => return Err(LinalgError::ShapeError("no generators".into())),
        };
        if generators.iter().any(|g| !g.ring().same(&ring)) {
            return Err(exact_arith::ArithError::RingMismatch.into());
        }
        let mut vars: Vec<usize> = extra_vars.to_vec();
        for g in generators {
            vars.extend(g.variables());
        }
        vars.sort_unstable();
        vars.dedup();

        let mut labels = Vec::new();
        for (gi, g) in generators.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let gdeg = bound.degree_of(g).unwrap_or(0);
            if gdeg > bound.bound {
                continue;
            }
            let gtot = g.total_degree().unwrap_or(0);
            let room_total = match bound.total_cap {
                Some(cap) if cap < gtot => continue,
                Some(cap) => cap - gtot,
                None => bound.bound - gdeg,
            };
            let n = ring.nvars();
            for m in monomials_up_to(n, &vars, room_total) {
                if bound.mono_degree(&m) + gdeg <= bound.bound {
                    labels.push((gi, m));
                }
            }
        }

        let mut basis = MacaulayBasis {
            ring,
            generators: generators.to_vec(),
            bound,
            labels,
            rows: Vec::new(),
            pivots: HashMap::new(),
        };
        for li in 0..basis.labels.len() {
            basis.insert(li);
        }
        Ok(basis)
    }

    fn original_row(&self, label: usize) -> Polynomial {
        let (gi, m) = &self.labels[label];
        self.generators[*gi].mul_term(m, &Rational::one())
    }

    /// Reduces `v` by leading terms; returns the remainder and the reduction record.
    fn reduce(&self, mut v: Polynomial) -> (Polynomial, Vec<(usize, Rational)>) {
        let mut red = Vec::new();
        while let Some((lm, lc)) = v.leading_term().cloned() {
            let Some(&k) = self.pivots.get(&lm) else { break };
            let row = &self.rows[k];
            let f = &lc / &row.poly.leading_term().unwrap().1;
            v = &v - &row.poly.scale(&f);
            red.push((k, f));
        }
        (v, red)
    }

    fn insert(&mut self, label: usize) {
        let v = self.original_row(label);
        let (v, red) = self.reduce(v);
        let Some((lm, lc)) = v.leading_term().cloned() else { return };
        let prim = v.primitive();
        let s = &prim.leading_term().unwrap().1 / &lc;
        let reductions = red.into_iter().map(|(k, f)| (k, -(&f * &s))).collect();
        self.pivots.insert(lm, self.rows.len());
        self.rows.push(EchelonRow { poly: prim, label, own: s, reductions });
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn num_multipliers(&self) -> usize {
        self.labels.len()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Certificate for `target`, or `NotFoundUpToBound`.
    pub fn certify(&self, target: &Polynomial) -> Result<MembershipCertificate, MembershipError> {
        if !target.ring().same(&self.ring) {
            return Err(MembershipError::RingMismatch);
        }
        if let Some(d) = self.bound.degree_of(target) {
            if d > self.bound.bound {
                return Err(MembershipError::BoundTooSmall { degree: d, bound: self.bound.bound });
            }
        }
        let (rem, red) = self.reduce(target.clone());
        if !rem.is_zero() {
            return Err(MembershipError::NotFoundUpToBound);
        }
        let mut coef: Vec<Rational> = vec![Rational::zero(); self.rows.len()];
        for (k, f) in red {
            coef[k] += &f;
        }
        let mut label_coef: HashMap<usize, Rational> = HashMap::new();
        for j in (0..self.rows.len()).rev() {
            if coef[j].is_zero() {
                continue;
            }
            let c = coef[j].clone();
            let row = &self.rows[j];
            *label_coef.entry(row.label).or_insert_with(Rational::zero) += &(&c * &row.own);
            for (k, b) in &row.reductions {
                coef[*k] += &(&c * b);
            }
        }
        let mut accs: Vec<Accumulator> = self.generators.iter().map(|_| Accumulator::new(&self.ring)).collect();
        for (l, c) in label_coef {
            let (gi, m) = &self.labels[l];
            accs[*gi].add_term(m.clone(), c);
        }
        let cert = MembershipCertificate {
            target: target.clone(),
            generators: self.generators.clone(),
            degree_bound: self.bound.bound,
            cofactors: Some(accs.into_iter().map(|a| a.finish()).collect()),
        };
        debug_assert!(cert.verify());
        Ok(cert)
    }
}

/// All monomials in the variables `vars` of total degree at most `d`.
pub fn monomials_up_to(n: usize, vars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u16; n];
    fn rec(vars: &[usize], k: usize, left: u32, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if k == vars.len() {
            out.push(Monomial::from_exps(exps.clone()));
            return;
        }
        for e in 0..=left {
            exps[vars[k]] = e as u16;
            rec(vars, k + 1, left - e, exps, out);
        }
        exps[vars[k]] = 0;
    }
    rec(vars, 0, d, &mut exps, &mut out);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MembershipError {
    #[error("no certificate found up to the degree bound")]
    NotFoundUpToBound,
    #[error("target degree {degree} exceeds bound {bound}")]
    BoundTooSmall { degree: u32, bound: u32 },
    #[error("target ring differs from generator ring")]
    RingMismatch,
}

/// Degree-bounded ideal membership with total-degree bound.
pub fn macaulay_membership(
    target: &Polynomial,
    generators: &[Polynomial],
    degree_bound: u32,
) -> Result<MembershipCertificate, MembershipError> {
    if let Some(d) = target.total_degree() {
        if d > degree_bound {
            return Err(MembershipError::BoundTooSmall { degree: d, bound: degree_bound });
        }
    }
    let basis = MacaulayBasis::new(generators, DegreeBound::total(degree_bound), &target.variables())
        .map_err(|_| MembershipError::RingMismatch)?;
    basis.certify(target)
}

/// Remainder of division by a single polynomial in the fixed monomial order.
pub fn reduce_mod_principal(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, LinalgError> {
    Ok(f.div_rem(g)?.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_memberships() {
        let r = Ring::of(&["x", "y"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let cert = macaulay_membership(&p("x^2"), &[p("x")], 2).unwrap();
        assert_eq!(cert.cofactors.as_ref().unwrap()[0], p("x"));
        assert!(cert.verify());
        assert_eq!(macaulay_membership(&p("y"), &[p("x")], 5), Err(MembershipError::NotFoundUpToBound));
        assert!(matches!(
            macaulay_membership(&p("x^3"), &[p("x")], 2),
            Err(MembershipError::BoundTooSmall { .. })
        ));
    }

    #[test]
    fn combination_of_several_generators() {
        let r = Ring::of(&["x", "y", "z"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let gens = [p("x*y - z"), p("y^2 - x"), p("x*z - 1")];
        let target = &(&p("3*x + y") * &gens[0]) + &(&p("-z") * &gens[1]);
        let target = &target + &gens[2].scale_i(7);
        let cert = macaulay_membership(&target, &gens, 3).unwrap();
        assert!(cert.verify());
        let js = cert.to_json();
        assert_eq!(js["bound"], 3);
        assert_eq!(js["generators"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn graded_bound_with_zero_weight_parameters() {
        // a is a parameter of grading 0; target = a * (x^2 - y)
        let r = Ring::of(&["a", "x", "y"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let gens = [p("x^2 - a*y")];
        let target = p("a*x^2 - a^2*y");
        let b = MacaulayBasis::new(&gens, DegreeBound::graded(2, vec![0, 1, 1], 3), &[]).unwrap();
        assert!(b.certify(&target).unwrap().verify());
        let tight = MacaulayBasis::new(&gens, DegreeBound::graded(2, vec![0, 1, 1], 2), &[]).unwrap();
        assert_eq!(tight.certify(&target), Err(MembershipError::NotFoundUpToBound));
    }

    #[test]
    fn principal_reduction() {
        let r = Ring::of(&["a", "b", "c", "d", "x"]);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let g = p("a*d - b*c - 1");
        assert!(reduce_mod_principal(&(&g * &p("a+b")), &g).unwrap().is_zero());
        assert_eq!(reduce_mod_principal(&p("a"), &g).unwrap(), p("a"));
        assert!(reduce_mod_principal(&p("a"), &p("0")).is_err());
    }
}
