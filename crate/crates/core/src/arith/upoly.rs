use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};

use super::field::Field;
use super::rational::Rational;

/// Sparse univariate polynomial over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F: Field> {
    terms: BTreeMap<u32, F>,
}

impl<F: Field> Default for UPoly<F> {
    fn default() -> Self {
        UPoly { terms: BTreeMap::new() }
    }
}

impl<F: Field> UPoly<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: F, e: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::monomial(F::one(), 1)
    }

    /// From coefficients listed by increasing exponent.
    pub fn from_coeffs(cs: Vec<F>) -> Self {
        let mut p = Self::zero();
        for (e, c) in cs.into_iter().enumerate() {
            p.add_term(e as u32, c);
        }
        p
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (u32, F)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in ts {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, e: u32, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn deg(&self) -> i64 {
        self.degree().map_or(-1, |d| d as i64)
    }

    pub fn coeff(&self, e: u32) -> F {
        self.terms.get(&e).cloned().unwrap_or_else(F::zero)
    }

    pub fn lc(&self) -> F {
        self.terms.values().next_back().cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &F)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UPoly { terms: self.terms.iter().map(|(e, a)| (*e, a.clone() * c.clone())).collect() }
    }

    pub fn shift(&self, k: u32) -> Self {
        UPoly { terms: self.terms.iter().map(|(e, a)| (e + k, a.clone())).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&self.lc().inv())
    }

    pub fn derivative(&self) -> Self {
        let mut d = Self::zero();
        for (e, c) in self.terms() {
            if e > 0 {
                d.add_term(e - 1, c.clone() * F::from_rational(Rational::from_integer(e.into())));
            }
        }
        d
    }

    pub fn eval(&self, x: &F) -> F {
        let Some(deg) = self.degree() else { return F::zero() };
        let mut acc = F::zero();
        for e in (0..=deg).rev() {
            acc = acc * x.clone() + self.coeff(e);
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..n {
            r = &r * self;
        }
        r
    }

    /// `self(q(z))`.
    pub fn compose(&self, q: &Self) -> Self {
        let Some(deg) = self.degree() else { return Self::zero() };
        let mut acc = Self::zero();
        for e in (0..=deg).rev() {
            acc = &(&acc * q) + &Self::constant(self.coeff(e));
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let inv = d.lc().inv();
        let mut q = Self::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lc() * inv.clone();
            let t = Self::monomial(c, rd - dd);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        (q, r)
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics when the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> UPoly<G> {
        UPoly::from_terms(self.terms().map(|(e, c)| (e, f(c))))
    }

    pub fn fmt_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (e, c) in self.terms().rev() {
            let cs = c.to_string();
            let neg = cs.starts_with('-');
            let mag = if neg { cs[1..].to_string() } else { cs };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { "-" } else { "+" });
            }
            let mono = match e {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            };
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        s
    }
}

impl<F: Field> fmt::Display for UPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.fmt_var("z"))
    }
}

impl<F: Field> Add for &UPoly<F> {
    type Output = UPoly<F>;
    fn add(self, o: &UPoly<F>) -> UPoly<F> {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e, c.clone());
        }
        r
    }
}

impl<F: Field> Sub for &UPoly<F> {
    type Output = UPoly<F>;
    fn sub(self, o: &UPoly<F>) -> UPoly<F> {
        let mut r = self.clone();
        for (e, c) in o.terms() {
            r.add_term(e, -c.clone());
        }
        r
    }
}

impl<F: Field> Neg for &UPoly<F> {
    type Output = UPoly<F>;
    fn neg(self) -> UPoly<F> {
        UPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect() }
    }
}

impl<F: Field> Mul for &UPoly<F> {
    type Output = UPoly<F>;
    fn mul(self, o: &UPoly<F>) -> UPoly<F> {
        let mut r = UPoly::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in o.terms() {
                r.add_term(e1 + e2, c1.clone() * c2.clone());
            }
        }
        r
    }
}

impl UPoly<Rational> {
    pub fn from_ints(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// Primitive integer polynomial with positive leading coefficient and
    /// the same roots, as dense coefficients (low to high).
    pub fn primitive_integer(&self) -> Vec<BigInt> {
        let Some(deg) = self.degree() else { return vec![] };
        let l = self
            .terms()
            .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let mut v: Vec<BigInt> = (0..=deg)
            .map(|e| (self.coeff(e) * Rational::from_integer(l.clone())).to_integer())
            .collect();
        let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
        if v.last().unwrap().is_negative() {
            for c in v.iter_mut() {
                *c = -&*c;
            }
        }
        v
    }

    pub fn from_bigints(v: &[BigInt]) -> Self {
        Self::from_coeffs(v.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Scale to a primitive integer polynomial with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        Self::from_bigints(&self.primitive_integer())
    }

    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.exact_div(&g).monic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};

    #[test]
    fn division_and_gcd() {
        let a = UPoly::from_ints(&[-1, 0, 1]);
        let b = UPoly::from_ints(&[1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, UPoly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        let c = UPoly::from_ints(&[2, -3, 1]);
        assert_eq!(a.gcd(&c), UPoly::from_ints(&[-1, 1]));
    }

    #[test]
    fn compose_and_eval() {
        let p = UPoly::from_ints(&[1, 0, 1]);
        let q = UPoly::from_ints(&[1, 1]);
        assert_eq!(p.compose(&q), UPoly::from_ints(&[2, 2, 1]));
        assert_eq!(p.eval(&ratio(1, 2)), ratio(5, 4));
        assert_eq!(p.derivative(), UPoly::from_ints(&[0, 2]));
    }

    #[test]
    fn primitive_form() {
        let p = UPoly::from_coeffs(vec![ratio(-1, 2), rat(0), ratio(-3, 4)]);
        assert_eq!(p.primitive(), UPoly::from_ints(&[2, 0, 3]));
        assert_eq!(format!("{}", UPoly::from_coeffs(vec![ratio(-9, 2), rat(0), rat(1)])), "z^2-9/2");
    }

    #[test]
    fn squarefree() {
        let p = UPoly::from_ints(&[0, 1, -2, 1]);
        assert_eq!(p.squarefree_part(), UPoly::from_ints(&[0, -1, 1]));
    }
}
