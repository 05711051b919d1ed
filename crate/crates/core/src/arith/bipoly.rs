use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use super::field::Field;
use super::rational::Rational;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Exponent pair `(i, j)` of the monomial `x^i y^j`.
pub type Mono = (u32, u32);

/// Sparse bivariate polynomial over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly<F: Field> {
    terms: BTreeMap<Mono, F>,
}

impl<F: Field> Default for BiPoly<F> {
    fn default() -> Self {
        BiPoly { terms: BTreeMap::new() }
    }
}

impl<F: Field> BiPoly<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, (0, 0))
    }

    pub fn monomial(c: F, m: Mono) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(F::one(), (1, 0))
    }

    pub fn y() -> Self {
        Self::monomial(F::one(), (0, 1))
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (Mono, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in ts {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn set_coeff(&mut self, m: Mono, c: F) {
        self.terms.remove(&m);
        self.add_term(m, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Mono) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (Mono, &F)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn support(&self) -> Vec<Mono> {
        self.terms.keys().copied().collect()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    /// Lowest total degree of a term.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn filter(&self, keep: impl Fn(Mono) -> bool) -> Self {
        BiPoly { terms: self.terms.iter().filter(|(m, _)| keep(**m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Terms of total degree at most `d`.
    pub fn jet(&self, d: u32) -> Self {
        self.filter(|(i, j)| i + j <= d)
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        self.filter(|(i, j)| i + j == d)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())).collect() }
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        BiPoly { terms: self.terms.iter().map(|((i, j), a)| ((i + m.0, j + m.1), a.clone())).collect() }
    }

    pub fn deriv_x(&self) -> Self {
        let mut d = Self::zero();
        for ((i, j), c) in self.terms() {
            if i > 0 {
                d.add_term((i - 1, j), c.clone() * F::from_rational(Rational::from_integer(i.into())));
            }
        }
        d
    }

    pub fn deriv_y(&self) -> Self {
        let mut d = Self::zero();
        for ((i, j), c) in self.terms() {
            if j > 0 {
                d.add_term((i, j - 1), c.clone() * F::from_rational(Rational::from_integer(j.into())));
            }
        }
        d
    }

    pub fn swap_xy(&self) -> Self {
        BiPoly { terms: self.terms.iter().map(|((i, j), c)| ((*j, *i), c.clone())).collect() }
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = F::zero();
        for ((i, j), c) in self.terms() {
            let mut t = c.clone();
            for _ in 0..i {
                t = t * x.clone();
            }
            for _ in 0..j {
                t = t * y.clone();
            }
            acc = acc + t;
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

    /// Product keeping only monomials accepted by `keep`; `keep` must be
    /// closed downwards under division for the result to be a truncation of
    /// the full product.
    pub fn mul_trunc(&self, o: &Self, keep: &dyn Fn(Mono) -> bool) -> Self {
        let mut r = Self::zero();
        for ((i1, j1), c1) in self.terms() {
            for ((i2, j2), c2) in o.terms() {
                let m = (i1 + i2, j1 + j2);
                if keep(m) {
                    r.add_term(m, c1.clone() * c2.clone());
                }
            }
        }
        r
    }

    /// Exact division by `x^a y^b`; errors if some term is not divisible.
    pub fn div_mono(&self, m: Mono) -> Result<Self> {
        let mut r = Self::zero();
        for ((i, j), c) in self.terms() {
            if i < m.0 || j < m.1 {
                return Err(Error::NotDivisible(format!("x^{i}*y^{j} by x^{}*y^{}", m.0, m.1)));
            }
            r.add_term((i - m.0, j - m.1), c.clone());
        }
        Ok(r)
    }

    /// `F(1, t)` of a form, indexing by the y-exponent.
    pub fn dehomogenize(&self) -> UPoly<F> {
        UPoly::from_terms(self.terms().map(|((_, j), c)| (j, c.clone())))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BiPoly<G> {
        BiPoly::from_terms(self.terms().map(|(m, c)| (m, f(c))))
    }

    /// Terms ordered by total degree, then by decreasing power of x.
    pub fn sorted_terms(&self) -> Vec<(Mono, F)> {
        let mut v: Vec<(Mono, F)> = self.terms().map(|(m, c)| (m, c.clone())).collect();
        v.sort_by_key(|((i, j), _)| (i + j, std::cmp::Reverse(*i)));
        v
    }
}

pub fn fmt_mono(m: Mono) -> String {
    let part = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let ps: Vec<String> = [part("x", m.0), part("y", m.1)].into_iter().flatten().collect();
    ps.join("*")
}

impl<F: Field> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut s = String::new();
        for (m, c) in self.sorted_terms() {
            let cs = c.to_string();
            let neg = cs.starts_with('-');
            let mag = if neg { cs[1..].to_string() } else { cs };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push(if neg { '-' } else { '+' });
            }
            let mono = fmt_mono(m);
            if mono.is_empty() {
                s.push_str(&mag);
            } else if mag == "1" {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        write!(f, "{s}")
    }
}

impl<F: Field> Add for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn add(self, o: &BiPoly<F>) -> BiPoly<F> {
        let mut r = self.clone();
        for (m, c) in o.terms() {
            r.add_term(m, c.clone());
        }
        r
    }
}

impl<F: Field> Sub for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn sub(self, o: &BiPoly<F>) -> BiPoly<F> {
        let mut r = self.clone();
        for (m, c) in o.terms() {
            r.add_term(m, -c.clone());
        }
        r
    }
}

impl<F: Field> Neg for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn neg(self) -> BiPoly<F> {
        BiPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl<F: Field> Mul for &BiPoly<F> {
    type Output = BiPoly<F>;
    fn mul(self, o: &BiPoly<F>) -> BiPoly<F> {
        self.mul_trunc(o, &|_| true)
    }
}

impl BiPoly<Rational> {
    /// Convenience constructor from integer coefficients.
    pub fn from_int_terms(ts: &[((u32, u32), i64)]) -> Self {
        Self::from_terms(ts.iter().map(|&(m, c)| (m, Rational::from_integer(c.into()))))
    }
}
