use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num::{One, Signed, Zero};

use super::field::Field;
use super::rational::{is_square, rat, Rational};
use super::upoly::UPoly;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiscriminantSign {
    Real,
    Imaginary,
}

/// `Q[t]/(t^2 + p t + q)` with an irreducible modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadExt {
    p: Rational,
    q: Rational,
}

impl QuadExt {
    pub fn new(p: Rational, q: Rational) -> Result<Arc<Self>> {
        let disc = &p * &p - rat(4) * &q;
        if is_square(&disc) {
            return Err(Error::Reducible(format!("t^2+({p})*t+({q})")));
        }
        Ok(Arc::new(QuadExt { p, q }))
    }

    /// Field generated by a root of a quadratic polynomial over Q.
    pub fn from_poly(m: &UPoly<Rational>) -> Result<Arc<Self>> {
        if m.degree() != Some(2) {
            return Err(Error::Reducible(format!("{m}")));
        }
        let m = m.monic();
        QuadExt::new(m.coeff(1), m.coeff(0))
    }

    pub fn modulus(&self) -> UPoly<Rational> {
        UPoly::from_coeffs(vec![self.q.clone(), self.p.clone(), rat(1)])
    }

    pub fn discriminant(&self) -> Rational {
        &self.p * &self.p - rat(4) * &self.q
    }

    pub fn discriminant_sign(&self) -> DiscriminantSign {
        if self.discriminant().is_positive() {
            DiscriminantSign::Real
        } else {
            DiscriminantSign::Imaginary
        }
    }

    pub fn gen(self: &Arc<Self>) -> ExtElem {
        ExtElem::new(self, rat(0), rat(1))
    }

    pub fn elem(self: &Arc<Self>, a: Rational, b: Rational) -> ExtElem {
        ExtElem::new(self, a, b)
    }
}

/// Element `a + b t` of a quadratic extension; `field == None` means an
/// embedded rational.
#[derive(Clone, Debug)]
pub struct ExtElem {
    field: Option<Arc<QuadExt>>,
    a: Rational,
    b: Rational,
}

impl ExtElem {
    pub fn new(field: &Arc<QuadExt>, a: Rational, b: Rational) -> Self {
        ExtElem { field: Some(field.clone()), a, b }
    }

    pub fn rational(a: Rational) -> Self {
        ExtElem { field: None, a, b: rat(0) }
    }

    pub fn coords(&self) -> (&Rational, &Rational) {
        (&self.a, &self.b)
    }

    pub fn field(&self) -> Option<&Arc<QuadExt>> {
        self.field.as_ref()
    }

    pub fn conjugate(&self) -> Self {
        match &self.field {
            None => self.clone(),
            Some(k) => ExtElem {
                field: self.field.clone(),
                a: &self.a - &self.b * &k.p,
                b: -self.b.clone(),
            },
        }
    }

    pub fn norm(&self) -> Rational {
        match &self.field {
            None => &self.a * &self.a,
            Some(k) => &self.a * &self.a - &self.a * &self.b * &k.p + &self.b * &self.b * &k.q,
        }
    }

    pub fn trace(&self) -> Rational {
        match &self.field {
            None => rat(2) * &self.a,
            Some(k) => rat(2) * &self.a - &self.b * &k.p,
        }
    }

    fn join(&self, other: &Self) -> Option<Arc<QuadExt>> {
        match (&self.field, &other.field) {
            (Some(k), Some(l)) => {
                assert!(Arc::ptr_eq(k, l) || k == l, "mixing distinct quadratic fields");
                Some(k.clone())
            }
            (Some(k), None) | (None, Some(k)) => Some(k.clone()),
            (None, None) => None,
        }
    }
}

impl PartialEq for ExtElem {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl fmt::Display for ExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({}*t)", self.b)
        } else {
            write!(f, "({}+{}*t)", self.a, self.b)
        }
    }
}

impl Add for ExtElem {
    type Output = ExtElem;
    fn add(self, o: ExtElem) -> ExtElem {
        let field = self.join(&o);
        ExtElem { field, a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for ExtElem {
    type Output = ExtElem;
    fn sub(self, o: ExtElem) -> ExtElem {
        let field = self.join(&o);
        ExtElem { field, a: self.a - o.a, b: self.b - o.b }
    }
}

impl Neg for ExtElem {
    type Output = ExtElem;
    fn neg(self) -> ExtElem {
        ExtElem { field: self.field, a: -self.a, b: -self.b }
    }
}

impl Mul for ExtElem {
    type Output = ExtElem;
    fn mul(self, o: ExtElem) -> ExtElem {
        let field = self.join(&o);
        let bd = &self.b * &o.b;
        let (a, b) = match &field {
            None => (&self.a * &o.a, rat(0)),
            Some(k) => (
                &self.a * &o.a - &bd * &k.q,
                &self.a * &o.b + &self.b * &o.a - &bd * &k.p,
            ),
        };
        ExtElem { field, a, b }
    }
}

impl Div for ExtElem {
    type Output = ExtElem;
    fn div(self, o: ExtElem) -> ExtElem {
        self * o.inv()
    }
}

impl Zero for ExtElem {
    fn zero() -> Self {
        ExtElem::rational(rat(0))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for ExtElem {
    fn one() -> Self {
        ExtElem::rational(rat(1))
    }
}

impl Field for ExtElem {
    fn from_rational(q: Rational) -> Self {
        ExtElem::rational(q)
    }
    fn as_rational(&self) -> Option<Rational> {
        self.b.is_zero().then(|| self.a.clone())
    }
    fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        let c = self.conjugate();
        ExtElem { field: c.field, a: c.a / &n, b: c.b / &n }
    }
}
