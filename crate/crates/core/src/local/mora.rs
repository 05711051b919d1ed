//! Local standard bases in two variables via Mora's tangent cone normal form.

use std::cmp::Ordering;

use num::One;

use crate::arith::bipoly::{BiPoly, Mono};
use crate::arith::rational::Rational;

type P = BiPoly<Rational>;

/// Local degree ordering: lower total degree is larger; ties broken by the
/// power of x.
pub fn local_cmp(a: Mono, b: Mono) -> Ordering {
    (b.0 + b.1).cmp(&(a.0 + a.1)).then(a.0.cmp(&b.0))
}

pub fn leading(f: &P) -> Option<(Mono, Rational)> {
    f.terms().max_by(|a, b| local_cmp(a.0, b.0)).map(|(m, c)| (m, c.clone()))
}

pub fn ecart(f: &P) -> u32 {
    match leading(f) {
        None => 0,
        Some((m, _)) => f.total_degree().unwrap() - (m.0 + m.1),
    }
}

fn divides(a: Mono, b: Mono) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// Result of a local standard basis computation.
#[derive(Clone, Debug)]
pub struct LocalBasis {
    pub basis: Vec<P>,
    /// Terms of degree `>= cap` are treated as zero.
    pub cap: u32,
    pub complete: bool,
}

impl LocalBasis {
    pub fn leading_monomials(&self) -> Vec<Mono> {
        self.basis.iter().filter_map(|g| leading(g).map(|(m, _)| m)).collect()
    }

    /// Monomials of degree below the cap outside the leading ideal.
    pub fn staircase(&self) -> Vec<Mono> {
        let lms = self.leading_monomials();
        let mut out = vec![];
        for d in 0..self.cap {
            for i in 0..=d {
                let m = (i, d - i);
                if !lms.iter().any(|l| divides(*l, m)) {
                    out.push(m);
                }
            }
        }
        out
    }
}

struct Engine {
    cap: u32,
    steps: usize,
    max_steps: usize,
}

impl Engine {
    fn truncate(&self, f: &P) -> P {
        f.filter(|(i, j)| i + j < self.cap)
    }

    fn reduce_step(&self, h: &P, g: &P) -> P {
        let (mh, ch) = leading(h).unwrap();
        let (mg, cg) = leading(g).unwrap();
        let shift = (mh.0 - mg.0, mh.1 - mg.1);
        let q = ch / cg;
        let t = g.mul_mono(shift).scale(&q);
        self.truncate(&(h - &t))
    }

    /// Mora's weak normal form of `f` with respect to `basis`.
    fn normal_form(&mut self, f: &P, basis: &[P]) -> Option<P> {
        let mut h = self.truncate(f);
        let mut t: Vec<P> = basis.to_vec();
        loop {
            self.steps += 1;
            if self.steps > self.max_steps {
                return None;
            }
            let Some((mh, _)) = leading(&h) else { return Some(h) };
            let best = t
                .iter()
                .enumerate()
                .filter(|(_, g)| leading(g).is_some_and(|(mg, _)| divides(mg, mh)))
                .min_by_key(|(_, g)| ecart(g))
                .map(|(i, _)| i);
            let Some(i) = best else { return Some(h) };
            let g = t[i].clone();
            if ecart(&g) > ecart(&h) {
                t.push(h.clone());
            }
            h = self.reduce_step(&h, &g);
        }
    }

    fn spoly(&self, f: &P, g: &P) -> P {
        let (mf, cf) = leading(f).unwrap();
        let (mg, cg) = leading(g).unwrap();
        let l = (mf.0.max(mg.0), mf.1.max(mg.1));
        let a = f.mul_mono((l.0 - mf.0, l.1 - mf.1)).scale(&cg);
        let b = g.mul_mono((l.0 - mg.0, l.1 - mg.1)).scale(&cf);
        self.truncate(&(&a - &b))
    }
}

/// Standard basis of the ideal generated by `gens` plus `m^cap`, under the
/// local degree ordering. `complete` is false if `max_steps` was exceeded.
pub fn standard_basis(gens: &[P], cap: u32, max_steps: usize) -> LocalBasis {
    let mut e = Engine { cap, steps: 0, max_steps };
    let mut basis: Vec<P> = vec![];
    for g in gens {
        match e.normal_form(g, &basis) {
            None => return LocalBasis { basis, cap, complete: false },
            Some(h) if !h.is_zero() => basis.push(monic(&h)),
            _ => {}
        }
    }
    let mut pairs: Vec<(usize, usize)> = vec![];
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let s = e.spoly(&basis[i], &basis[j]);
        match e.normal_form(&s, &basis) {
            None => return LocalBasis { basis, cap, complete: false },
            Some(h) if !h.is_zero() => {
                let k = basis.len();
                basis.push(monic(&h));
                for i in 0..k {
                    pairs.push((i, k));
                }
            }
            _ => {}
        }
    }
    LocalBasis { basis, cap, complete: true }
}

fn monic(h: &P) -> P {
    let (_, c) = leading(h).unwrap();
    if c.is_one() {
        h.clone()
    } else {
        h.scale(&c.recip())
    }
}

/// `dim Q[x,y]_(x,y) / (gens + m^cap)`, or `None` if the step budget ran out.
pub fn local_dimension(gens: &[P], cap: u32, max_steps: usize) -> Option<usize> {
    let sb = standard_basis(gens, cap, max_steps);
    sb.complete.then(|| sb.staircase().len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brieskorn_quotient() {
        let gens = vec![BiPoly::from_int_terms(&[((2, 0), 3)]), BiPoly::from_int_terms(&[((0, 7), 8)])];
        assert_eq!(local_dimension(&gens, 20, 10_000), Some(14));
    }

    #[test]
    fn units_are_invisible() {
        // (x + x^2, y + y^3) generates the maximal ideal locally.
        let gens = vec![
            BiPoly::from_int_terms(&[((1, 0), 1), ((2, 0), 1)]),
            BiPoly::from_int_terms(&[((0, 1), 1), ((0, 3), 1)]),
        ];
        assert_eq!(local_dimension(&gens, 10, 10_000), Some(1));
        assert_eq!(ecart(&gens[1]), 2);
    }
}
