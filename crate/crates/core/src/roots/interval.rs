use std::fmt;

use num::{Signed, Zero};

use crate::arith::rational::{rat, Rational};

/// Real interval with rational or infinite endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    /// `None` is minus infinity.
    pub lower: Option<Rational>,
    /// `None` is plus infinity.
    pub upper: Option<Rational>,
    pub lower_closed: bool,
    pub upper_closed: bool,
}

impl Interval {
    pub fn new(lower: Option<Rational>, upper: Option<Rational>, lower_closed: bool, upper_closed: bool) -> Self {
        Interval {
            lower_closed: lower_closed && lower.is_some(),
            upper_closed: upper_closed && upper.is_some(),
            lower,
            upper,
        }
    }

    pub fn real_line() -> Self {
        Self::new(None, None, false, false)
    }

    pub fn open(a: Rational, b: Rational) -> Self {
        Self::new(Some(a), Some(b), false, false)
    }

    pub fn closed(a: Rational, b: Rational) -> Self {
        Self::new(Some(a), Some(b), true, true)
    }

    pub fn point(a: Rational) -> Self {
        Self::closed(a.clone(), a)
    }

    /// `(0, +inf)`.
    pub fn positive() -> Self {
        Self::new(Some(rat(0)), None, false, false)
    }

    /// `(-inf, 0)`.
    pub fn negative() -> Self {
        Self::new(None, Some(rat(0)), false, false)
    }

    /// `(-inf, 0]`.
    pub fn non_positive() -> Self {
        Self::new(None, Some(rat(0)), false, true)
    }

    /// `[0, +inf)`.
    pub fn non_negative() -> Self {
        Self::new(Some(rat(0)), None, true, false)
    }

    /// Image under `x -> -x`.
    pub fn negate(&self) -> Self {
        Self::new(
            self.upper.as_ref().map(|u| -u),
            self.lower.as_ref().map(|l| -l),
            self.upper_closed,
            self.lower_closed,
        )
    }

    pub fn is_point(&self) -> bool {
        self.lower_closed && self.upper_closed && self.lower == self.upper
    }

    pub fn is_bounded(&self) -> bool {
        self.lower.is_some() && self.upper.is_some()
    }

    pub fn is_empty(&self) -> bool {
        match (&self.lower, &self.upper) {
            (Some(a), Some(b)) => a > b || (a == b && !(self.lower_closed && self.upper_closed)),
            _ => false,
        }
    }

    pub fn contains(&self, q: &Rational) -> bool {
        let lo = match &self.lower {
            None => true,
            Some(a) => a < q || (self.lower_closed && a == q),
        };
        let hi = match &self.upper {
            None => true,
            Some(b) => q < b || (self.upper_closed && b == q),
        };
        lo && hi
    }

    pub fn intersect(&self, o: &Self) -> Self {
        let (lower, lower_closed) = match (&self.lower, &o.lower) {
            (None, _) => (o.lower.clone(), o.lower_closed),
            (_, None) => (self.lower.clone(), self.lower_closed),
            (Some(a), Some(b)) if a > b => (Some(a.clone()), self.lower_closed),
            (Some(a), Some(b)) if b > a => (Some(b.clone()), o.lower_closed),
            (Some(a), Some(_)) => (Some(a.clone()), self.lower_closed && o.lower_closed),
        };
        let (upper, upper_closed) = match (&self.upper, &o.upper) {
            (None, _) => (o.upper.clone(), o.upper_closed),
            (_, None) => (self.upper.clone(), self.upper_closed),
            (Some(a), Some(b)) if a < b => (Some(a.clone()), self.upper_closed),
            (Some(a), Some(b)) if b < a => (Some(b.clone()), o.upper_closed),
            (Some(a), Some(_)) => (Some(a.clone()), self.upper_closed && o.upper_closed),
        };
        Self::new(lower, upper, lower_closed, upper_closed)
    }

    /// Whether every point is strictly positive (resp. negative).
    pub fn sign(&self) -> Option<i32> {
        if let Some(a) = &self.lower {
            if a.is_positive() || (a.is_zero() && !self.lower_closed) {
                return Some(1);
            }
        }
        if let Some(b) = &self.upper {
            if b.is_negative() || (b.is_zero() && !self.upper_closed) {
                return Some(-1);
            }
        }
        if self.is_point() && self.lower.as_ref().is_some_and(|a| a.is_zero()) {
            return Some(0);
        }
        None
    }
}

pub fn fmt_lower(i: &Interval) -> String {
    i.lower.as_ref().map_or("-inf".into(), |a| a.to_string())
}

pub fn fmt_upper(i: &Interval) -> String {
    i.upper.as_ref().map_or("+inf".into(), |b| b.to_string())
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lower_closed { '[' } else { '(' },
            fmt_lower(self),
            fmt_upper(self),
            if self.upper_closed { ']' } else { ')' }
        )
    }
}
