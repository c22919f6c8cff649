use std::collections::HashMap;

use exact_arith::{Accumulator, Polynomial, Rational, Ring};

use crate::system::FtsSystem;
use crate::FtsPoint;

/// Structure constants `T[k][i][j][l]` of the triple product on the standard basis.
/// Only nonzero entries are kept, one list per output coordinate.
pub(crate) struct TripleTensor {
    entries: Vec<Vec<(u8, u8, u8, Polynomial)>>,
}

impl TripleTensor {
    pub(crate) fn build(sys: &FtsSystem) -> TripleTensor {
        let ring = sys.params().clone();
        let view = sys.view(&ring).expect("parameter ring embeds");
        let mut cache: HashMap<[i8; 8], Vec<Polynomial>> = HashMap::new();
        let mut cube = |v: [i8; 8]| -> Vec<Polynomial> {
            cache
                .entry(v)
                .or_insert_with(|| {
                    let c: [Rational; 8] = v.map(|a| Rational::from(a as i64));
                    view.cube(&FtsPoint::from_rationals(&ring, &c)).components()
                })
                .clone()
        };
        let unit = |i: usize| {
            let mut v = [0i8; 8];
            v[i] = 1;
            v
        };
        let add = |a: [i8; 8], b: [i8; 8]| -> [i8; 8] { std::array::from_fn(|k| a[k] + b[k]) };
        let sixth = Rational::frac(1, 6);
        let mut sym: HashMap<(usize, usize, usize), Vec<Polynomial>> = HashMap::new();
        for i in 0..8 {
            for j in i..8 {
                for l in j..8 {
                    let (a, b, c) = (unit(i), unit(j), unit(l));
                    let terms: [([i8; 8], i64); 7] = [
                        (add(add(a, b), c), 1),
                        (add(a, b), -1),
                        (add(a, c), -1),
                        (add(b, c), -1),
                        (a, 1),
                        (b, 1),
                        (c, 1),
                    ];
                    let mut out = vec![Polynomial::zero(&ring); 8];
                    for (v, sign) in terms {
                        let cv = cube(v);
                        for k in 0..8 {
                            out[k] = &out[k] + &cv[k].scale_i(sign);
                        }
                    }
                    sym.insert((i, j, l), out.iter().map(|p| p.scale(&sixth)).collect());
                }
            }
        }
        let mut entries = vec![Vec::new(); 8];
        for i in 0..8 {
            for j in 0..8 {
                for l in 0..8 {
                    let mut key = [i, j, l];
                    key.sort_unstable();
                    let val = &sym[&(key[0], key[1], key[2])];
                    for k in 0..8 {
                        if !val[k].is_zero() {
                            entries[k].push((i as u8, j as u8, l as u8, val[k].clone()));
                        }
                    }
                }
            }
        }
        TripleTensor { entries }
    }

    pub(crate) fn embed(&self, ring: &Ring) -> TripleTensor {
        TripleTensor {
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(|(i, j, l, c)| (*i, *j, *l, c.embed_partial(ring).expect("parameters present"))).collect())
                .collect(),
        }
    }

    pub(crate) fn contract(&self, ring: &Ring, a: &FtsPoint, b: &FtsPoint, c: &FtsPoint) -> FtsPoint {
        let (ca, cb, cc) = (a.components(), b.components(), c.components());
        let mut ab: Vec<Option<Polynomial>> = vec![None; 64];
        let mut out = Vec::with_capacity(8);
        for row in &self.entries {
            let mut acc = Accumulator::new(ring);
            for (i, j, l, coef) in row {
                let (i, j, l) = (*i as usize, *j as usize, *l as usize);
                if ca[i].is_zero() || cb[j].is_zero() || cc[l].is_zero() {
                    continue;
                }
                let prod = ab[i * 8 + j].get_or_insert_with(|| &ca[i] * &cb[j]);
                let term = &(prod as &Polynomial * &cc[l]) * coef;
                acc.add(&term);
            }
            out.push(acc.finish());
        }
        FtsPoint::from_components(ring, &out)
    }
}
