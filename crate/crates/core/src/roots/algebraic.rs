use std::fmt;

use num::{Signed, Zero};

use super::factor::factor_rational;
use super::interval::Interval;
use super::sturm::SturmChain;
use crate::arith::rational::{rat, Rational};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};

/// Real algebraic number: the unique root of `minpoly` in `interval`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicNumber {
    pub minpoly: UPoly<Rational>,
    pub interval: Interval,
}

/// The monic irreducible factor of `p` vanishing at its unique root in `i`.
pub fn minpoly_in_interval(p: &UPoly<Rational>, i: &Interval) -> Result<AlgebraicNumber> {
    let fac = factor_rational(p)?;
    let mut hit = None;
    let mut total = 0;
    for (f, _) in &fac.factors {
        let n = SturmChain::new(f)?.count(i);
        if n > 0 {
            hit = Some(f.clone());
        }
        total += n;
    }
    match total {
        0 => Err(Error::NoRootInInterval),
        1 => {
            let minpoly = hit.unwrap();
            let a = AlgebraicNumber { minpoly, interval: i.clone() };
            debug_assert!(a.verify());
            Ok(a)
        }
        _ => Err(Error::MultipleRootsInInterval),
    }
}

impl AlgebraicNumber {
    pub fn rational(q: Rational) -> Self {
        AlgebraicNumber {
            minpoly: UPoly::from_coeffs(vec![-q.clone(), rat(1)]),
            interval: Interval::point(q),
        }
    }

    pub fn chain(&self) -> SturmChain {
        SturmChain::new(&self.minpoly).expect("nonzero minpoly")
    }

    /// Sturm count of the minpoly on the interval is exactly one.
    pub fn verify(&self) -> bool {
        self.chain().count(&self.interval) == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.minpoly.degree() == Some(1)).then(|| -self.minpoly.coeff(0))
    }

    pub fn sign(&self) -> i32 {
        if let Some(q) = self.as_rational() {
            return crate::arith::rational::sign(&q);
        }
        let c = self.chain();
        if c.count(&self.interval.intersect(&Interval::positive())) == 1 {
            1
        } else {
            -1
        }
    }

    /// Bounded isolating interval with endpoints that are not roots (or a
    /// point interval for rational numbers).
    pub fn bounded(&self) -> Interval {
        if let Some(q) = self.as_rational() {
            return Interval::point(q);
        }
        let c = self.chain();
        let m = c.bound().clone();
        let mut i = self.interval.intersect(&Interval::open(-m.clone(), m));
        i.lower_closed = false;
        i.upper_closed = false;
        debug_assert_eq!(c.count(&i), 1);
        i
    }

    /// Isolating interval of width at most `eps` (open, root-free endpoints).
    pub fn refined(&self, eps: &Rational) -> Interval {
        let mut i = self.bounded();
        if i.is_point() {
            return i;
        }
        let c = self.chain();
        while i.upper.clone().unwrap() - i.lower.clone().unwrap() > *eps {
            i = bisect_step(&c, &i);
        }
        i
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        self.minpoly.eval(q).is_zero() && self.interval.contains(q)
    }

    /// Same real number: equal minimal polynomials and the root lies in the
    /// intersection of both intervals.
    pub fn same_as(&self, other: &AlgebraicNumber) -> bool {
        self.minpoly == other.minpoly && self.chain().count(&self.interval.intersect(&other.interval)) == 1
    }

    /// `-a`.
    pub fn negate(&self) -> AlgebraicNumber {
        let n = self.minpoly.degree().unwrap();
        let p = UPoly::from_terms(self.minpoly.terms().map(|(e, c)| (e, if (n - e) % 2 == 1 { -c.clone() } else { c.clone() })));
        AlgebraicNumber { minpoly: p, interval: self.interval.negate() }
    }

    /// Floating approximation for display and diagnostics only.
    pub fn approx(&self) -> f64 {
        let i = self.refined(&Rational::new(1.into(), num::BigInt::from(1u64 << 40)));
        let mid = (i.lower.unwrap() + i.upper.unwrap()) / rat(2);
        num::ToPrimitive::to_f64(&mid).unwrap_or(f64::NAN)
    }

    /// Exact sign of `q(a)`.
    pub fn sign_of(&self, q: &UPoly<Rational>) -> i32 {
        if q.is_zero() || q.rem(&self.minpoly).is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return crate::arith::rational::sign(&q.eval(&r));
        }
        // q(a) != 0 since the minpoly is irreducible; shrink until q has no root left.
        let qc = SturmChain::new(q).expect("nonzero");
        let c = self.chain();
        let mut i = self.bounded();
        loop {
            let closed = Interval::closed(i.lower.clone().unwrap(), i.upper.clone().unwrap());
            if qc.count(&closed) == 0 {
                return crate::arith::rational::sign(&q.eval(i.lower.as_ref().unwrap()));
            }
            i = bisect_step(&c, &i);
            if let (true, Some(m)) = (i.is_point(), i.lower.clone()) {
                return crate::arith::rational::sign(&q.eval(&m));
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_zero())
    }

    pub fn abs_approx_eq(&self, q: &Rational) -> bool {
        self.contains_rational(&q.abs()) || self.contains_rational(&-q.abs())
    }
}

/// One bisection step keeping the root inside; may return a point interval.
pub fn bisect_step(c: &SturmChain, i: &Interval) -> Interval {
    let (a, b) = (i.lower.clone().unwrap(), i.upper.clone().unwrap());
    let mid = (&a + &b) / rat(2);
    if c.is_root(&mid) {
        return Interval::point(mid);
    }
    let left = Interval::open(a, mid.clone());
    if c.count(&left) == 1 {
        left
    } else {
        Interval::open(mid, b)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root of {} in {}", self.minpoly, self.interval)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    #[test]
    fn minpoly_examples() {
        let mut cs = vec![0i64; 13];
        cs[0] = -4096;
        cs[12] = 1;
        let a = minpoly_in_interval(&UPoly::from_ints(&cs), &Interval::positive()).unwrap();
        assert_eq!(a.minpoly, UPoly::from_ints(&[-2, 1]));
        assert!(a.interval.contains(&rat(2)));

        let p = UPoly::from_ints(&[11664, 0, -8136, 0, 25]);
        let i = Interval::new(Some(rat(0)), Some(rat(2)), true, false);
        let a = minpoly_in_interval(&p, &i).unwrap();
        assert_eq!(a.minpoly, UPoly::from_coeffs(vec![ratio(-6, 5), rat(1)]));
        assert!(a.contains_rational(&ratio(6, 5)));

        let a = minpoly_in_interval(&UPoly::from_ints(&[0, 1]), &Interval::point(rat(0))).unwrap();
        assert_eq!(a.minpoly, UPoly::from_ints(&[0, 1]));
        assert!(a.interval.is_point());
    }

    #[test]
    fn minpoly_errors() {
        let p = UPoly::from_ints(&[-1, 0, 1]);
        assert_eq!(minpoly_in_interval(&p, &Interval::open(rat(2), rat(3))), Err(Error::NoRootInInterval));
        assert_eq!(minpoly_in_interval(&p, &Interval::real_line()), Err(Error::MultipleRootsInInterval));
    }

    #[test]
    fn identity_and_negation() {
        let p = UPoly::from_ints(&[-2, 0, 1]);
        let a = minpoly_in_interval(&p, &Interval::positive()).unwrap();
        let b = minpoly_in_interval(&p, &Interval::open(rat(1), rat(2))).unwrap();
        assert!(a.same_as(&b));
        let n = a.negate();
        assert_eq!(n.sign(), -1);
        assert!(!n.same_as(&a));
        assert!((a.approx() - 2f64.sqrt()).abs() < 1e-9);
    }
}

#[cfg(test)]
mod sign_tests {
    use super::*;

    #[test]
    fn sign_at_sqrt2() {
        let a = minpoly_in_interval(&UPoly::from_ints(&[-2, 0, 1]), &Interval::positive()).unwrap();
        // z - 7/5 at sqrt 2 is positive, z - 3/2 negative, z^2 - 2 zero.
        assert_eq!(a.sign_of(&UPoly::from_coeffs(vec![crate::arith::rational::ratio(-7, 5), rat(1)])), 1);
        assert_eq!(a.sign_of(&UPoly::from_coeffs(vec![crate::arith::rational::ratio(-3, 2), rat(1)])), -1);
        assert_eq!(a.sign_of(&UPoly::from_ints(&[-2, 0, 1])), 0);
        assert_eq!(a.negate().sign_of(&UPoly::from_ints(&[0, 1])), -1);
    }
}
