use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::{One, Zero};

use super::rational::Rational;

/// Coefficient field: either Q or a quadratic extension of Q.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: Rational) -> Self;
    /// The rational value, when the element lies in Q.
    fn as_rational(&self) -> Option<Rational>;
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl Field for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn inv(&self) -> Self {
        self.recip()
    }
}
