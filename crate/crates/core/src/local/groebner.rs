//! Minimal Buchberger algorithm over Q in a handful of variables.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::arith::rational::Rational;
use crate::arith::upoly::UPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
}

pub type Exp = Vec<u32>;

fn cmp_exp(order: MonomialOrder, a: &Exp, b: &Exp) -> Ordering {
    match order {
        MonomialOrder::Lex => a.cmp(b),
        MonomialOrder::GrevLex => {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            da.cmp(&db).then_with(|| {
                for (x, y) in a.iter().zip(b).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            })
        }
    }
}

/// Polynomial in `n` variables; variable 0 is the largest in lex order.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly {
    n: usize,
    terms: BTreeMap<Exp, Rational>,
}

impl MPoly {
    pub fn zero(n: usize) -> Self {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::from_terms(n, [(vec![0; n], c)])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::from_terms(n, [(e, Rational::one())])
    }

    pub fn from_terms(n: usize, ts: impl IntoIterator<Item = (Exp, Rational)>) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in ts {
            assert_eq!(e.len(), n);
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    fn add_term(&mut self, e: Exp, c: Rational) {
        if c.is_zero() {
            return;
        }
        let s = self.terms.remove(&e).map_or(c.clone(), |o| o + c);
        if !s.is_zero() {
            self.terms.insert(e, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Rational)> {
        self.terms.iter()
    }

    pub fn leading(&self, order: MonomialOrder) -> Option<(&Exp, &Rational)> {
        self.terms.iter().max_by(|a, b| cmp_exp(order, a.0, b.0))
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut r = MPoly::zero(self.n);
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                let e: Exp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn mul_term(&self, e: &Exp, c: &Rational) -> MPoly {
        MPoly {
            n: self.n,
            terms: self.terms.iter().map(|(f, d)| (f.iter().zip(e).map(|(a, b)| a + b).collect(), d * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        self.mul_term(&vec![0; self.n], c)
    }

    /// Variables that actually occur.
    pub fn used_vars(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.terms.keys().any(|e| e[i] > 0)).collect()
    }

    /// The univariate polynomial in variable `i`, if no other variable occurs.
    pub fn as_univariate(&self, i: usize) -> Option<UPoly<Rational>> {
        if self.used_vars().iter().any(|&k| k != i) {
            return None;
        }
        Some(UPoly::from_terms(self.terms().map(|(e, c)| (e[i], c.clone()))))
    }

    fn monic(&self, order: MonomialOrder) -> MPoly {
        match self.leading(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, k)| **k > 0)
                    .map(|(i, k)| if *k == 1 { format!("v{i}") } else { format!("v{i}^{k}") })
                    .collect();
                if mono.is_empty() {
                    format!("{c}")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn divides(a: &Exp, b: &Exp) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn diff(a: &Exp, b: &Exp) -> Exp {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full reduction of `f` by `g`.
pub fn reduce(f: &MPoly, g: &[MPoly], order: MonomialOrder) -> MPoly {
    let mut p = f.clone();
    let mut r = MPoly::zero(f.n);
    while let Some((e, c)) = p.leading(order).map(|(e, c)| (e.clone(), c.clone())) {
        let hit = g.iter().find_map(|q| {
            let (eq, cq) = q.leading(order)?;
            divides(eq, &e).then(|| (q, diff(&e, eq), &c / cq))
        });
        match hit {
            Some((q, shift, k)) => p = p.sub(&q.mul_term(&shift, &k)),
            None => {
                r.add_term(e.clone(), c.clone());
                p.terms.remove(&e);
            }
        }
    }
    r
}

fn spoly(f: &MPoly, g: &MPoly, order: MonomialOrder) -> MPoly {
    let (ef, cf) = f.leading(order).unwrap();
    let (eg, cg) = g.leading(order).unwrap();
    let l = lcm(ef, eg);
    f.mul_term(&diff(&l, ef), &cf.recip()).sub(&g.mul_term(&diff(&l, eg), &cg.recip()))
}

/// Reduced Groebner basis (monic, sorted by leading monomial ascending).
pub fn groebner_basis(gens: &[MPoly], order: MonomialOrder) -> Vec<MPoly> {
    let mut g: Vec<MPoly> = gens.iter().filter(|p| !p.is_zero()).map(|p| p.monic(order)).collect();
    let mut pairs: Vec<(usize, usize)> = vec![];
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (ei, ej) = (g[i].leading(order).unwrap().0.clone(), g[j].leading(order).unwrap().0.clone());
        let l = lcm(&ei, &ej);
        // Product criterion.
        if l.iter().zip(ei.iter().zip(&ej)).all(|(x, (a, b))| *x == a + b) {
            continue;
        }
        // Chain criterion.
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && divides(g[k].leading(order).unwrap().0, &l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let h = reduce(&spoly(&g[i], &g[j], order), &g, order);
        if !h.is_zero() {
            let k = g.len();
            g.push(h.monic(order));
            for i in 0..k {
                pairs.push((i, k));
            }
        }
    }
    // Interreduce.
    let mut min: Vec<MPoly> = vec![];
    for (k, p) in g.iter().enumerate() {
        let e = p.leading(order).unwrap().0;
        let redundant = g.iter().enumerate().any(|(l, q)| {
            let eq = q.leading(order).unwrap().0;
            l != k && divides(eq, e) && (eq != e || l < k)
        });
        if !redundant {
            min.push(p.clone());
        }
    }
    let mut out = vec![];
    for k in 0..min.len() {
        let others: Vec<MPoly> = min.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, p)| p.clone()).collect();
        let (e, c) = min[k].leading(order).map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut tail = min[k].clone();
        tail.terms.remove(&e);
        let mut r = reduce(&tail, &others, order);
        r.add_term(e, c);
        out.push(r.monic(order));
    }
    out.sort_by(|a, b| cmp_exp(order, a.leading(order).unwrap().0, b.leading(order).unwrap().0));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn p(n: usize, ts: &[(&[u32], i64)]) -> MPoly {
        MPoly::from_terms(n, ts.iter().map(|(e, c)| (e.to_vec(), rat(*c))))
    }

    #[test]
    fn already_basis() {
        let g = vec![p(2, &[(&[2, 0], 1)]), p(2, &[(&[1, 1], 1)]), p(2, &[(&[0, 2], 1)])];
        let gb = groebner_basis(&g, MonomialOrder::Lex);
        assert_eq!(gb.len(), 3);
        for q in &g {
            assert!(gb.contains(q));
        }
    }

    #[test]
    fn substitution() {
        let g = vec![p(2, &[(&[1, 0], 1), (&[0, 0], -1)]), p(2, &[(&[1, 1], 1), (&[0, 0], -1)])];
        let gb = groebner_basis(&g, MonomialOrder::Lex);
        assert!(gb.contains(&p(2, &[(&[0, 1], 1), (&[0, 0], -1)])));
    }

    #[test]
    fn circle_and_line() {
        let g = vec![p(2, &[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -1)]), p(2, &[(&[1, 0], 1), (&[0, 1], -1)])];
        for order in [MonomialOrder::Lex, MonomialOrder::GrevLex] {
            let gb = groebner_basis(&g, order);
            let uni = gb.iter().find_map(|q| q.as_univariate(1).filter(|u| u.degree() == Some(2)));
            if order == MonomialOrder::Lex {
                assert_eq!(uni.unwrap().primitive(), UPoly::from_ints(&[-1, 0, 2]));
            }
            for q in &g {
                assert!(reduce(q, &gb, order).is_zero());
            }
        }
    }
}
