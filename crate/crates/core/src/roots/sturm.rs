use num::{BigInt, Integer, One, Signed, Zero};

use super::interval::Interval;
use crate::arith::rational::{pow2_ceil, rat, sign, Rational};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};

/// Divide by a positive constant so the coefficients are coprime integers.
fn positive_primitive(p: &UPoly<Rational>) -> UPoly<Rational> {
    if p.is_zero() {
        return p.clone();
    }
    let l = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let g = p.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(&(c * Rational::from_integer(l.clone())).to_integer()));
    p.scale(&Rational::new(l, g.abs()))
}

/// Strict upper bound on the absolute value of every complex root, a power of two.
pub fn root_bound(p: &UPoly<Rational>) -> Rational {
    let lc = p.lc().abs();
    let m = p.terms().map(|(_, c)| c.abs() / &lc).max().unwrap_or_else(|| rat(0));
    pow2_ceil(&(m + rat(1)))
}

/// Sturm chain of the squarefree part of a polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<UPoly<Rational>>,
    bound: Rational,
}

impl SturmChain {
    pub fn new(p: &UPoly<Rational>) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let s0 = positive_primitive(&p.squarefree_part());
        let bound = root_bound(&s0);
        let mut seq = vec![s0.clone(), positive_primitive(&s0.derivative())];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let r = seq[n - 2].rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(positive_primitive(&-&r));
        }
        Ok(SturmChain { seq, bound })
    }

    pub fn poly(&self) -> &UPoly<Rational> {
        &self.seq[0]
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut last = 0;
        let mut v = 0;
        for s in &self.seq {
            let sg = sign(&s.eval(x));
            if sg != 0 {
                if last != 0 && sg != last {
                    v += 1;
                }
                last = sg;
            }
        }
        v
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.seq[0].eval(x).is_zero()
    }

    /// Distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        if a >= b {
            return 0;
        }
        let n = self.variations(a) - self.variations(b);
        n - usize::from(self.is_root(b))
    }

    pub fn count(&self, i: &Interval) -> usize {
        if i.is_empty() {
            return 0;
        }
        let a = i.lower.clone().unwrap_or_else(|| -self.bound.clone());
        let b = i.upper.clone().unwrap_or_else(|| self.bound.clone());
        if a == b {
            return usize::from(self.is_root(&a));
        }
        let mut n = self.count_open(&a, &b);
        if i.lower_closed && self.is_root(&a) {
            n += 1;
        }
        if i.upper_closed && self.is_root(&b) {
            n += 1;
        }
        n
    }

    /// Isolating intervals of all real roots, in increasing order.
    pub fn isolate(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        let m = self.bound.clone();
        self.bisect(-m.clone(), m, &mut out);
        out
    }

    fn bisect(&self, a: Rational, b: Rational, out: &mut Vec<Interval>) {
        match self.count_open(&a, &b) {
            0 => {}
            1 => out.push(Interval::open(a, b)),
            _ => {
                let mid = (&a + &b) / rat(2);
                self.bisect(a, mid.clone(), out);
                if self.is_root(&mid) {
                    out.push(Interval::point(mid.clone()));
                }
                self.bisect(mid, b, out);
            }
        }
    }
}

/// Number of distinct real roots of `p` in `i`.
pub fn sturm_count(p: &UPoly<Rational>, i: &Interval) -> Result<usize> {
    Ok(SturmChain::new(p)?.count(i))
}

pub fn isolate_real_roots(p: &UPoly<Rational>) -> Result<Vec<Interval>> {
    Ok(SturmChain::new(p)?.isolate())
}

/// Number of real roots counted with multiplicity.
pub fn real_roots_with_multiplicity(p: &UPoly<Rational>) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut total = 0;
    for (f, m) in super::factor::squarefree_decomposition(p) {
        total += m as usize * sturm_count(&f, &Interval::real_line())?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let line = Interval::real_line();
        assert_eq!(sturm_count(&UPoly::from_ints(&[1, 0, 0, 0, 1]), &line).unwrap(), 0);
        assert_eq!(sturm_count(&UPoly::from_ints(&[0, -1, 0, 1]), &line).unwrap(), 3);
        let p = UPoly::from_ints(&[-2, 0, 1]);
        assert_eq!(sturm_count(&p, &Interval::open(rat(0), rat(2))).unwrap(), 1);
        let cube = UPoly::from_ints(&[0, -1, 0, 1]);
        assert_eq!(sturm_count(&cube, &Interval::closed(rat(0), rat(1))).unwrap(), 2);
        assert_eq!(sturm_count(&cube, &Interval::open(rat(0), rat(1))).unwrap(), 0);
        assert_eq!(sturm_count(&cube, &Interval::non_positive()).unwrap(), 2);
        assert_eq!(sturm_count(&cube, &Interval::point(rat(0))).unwrap(), 1);
        assert!(sturm_count(&UPoly::zero(), &line).is_err());
    }

    #[test]
    fn isolation() {
        let iv = isolate_real_roots(&UPoly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv[0].upper.as_ref().unwrap() <= iv[1].lower.as_ref().unwrap());
        assert!(isolate_real_roots(&UPoly::from_ints(&[1, 0, 1])).unwrap().is_empty());
        let p = UPoly::from_ints(&[0, 1, -2, 1]);
        let iv = isolate_real_roots(&p).unwrap();
        assert_eq!(iv.len(), 2);
        for i in &iv {
            assert_eq!(sturm_count(&p, i).unwrap(), 1);
        }
    }
}
