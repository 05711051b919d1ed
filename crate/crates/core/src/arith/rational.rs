use num::{BigInt, BigRational, One, Signed, Zero};
use num::integer::Integer;

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// `q^e` for a possibly negative exponent.
pub fn pow_i(q: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num::pow(q.clone(), e as usize)
    } else {
        num::pow(q.recip(), (-e) as usize)
    }
}

pub fn lcm_denominators<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Exact `n`-th root of a nonnegative rational, if it exists.
pub fn exact_root(q: &Rational, n: u32) -> Option<Rational> {
    if q.is_negative() {
        if n % 2 == 1 {
            return exact_root(&-q, n).map(|r| -r);
        }
        return None;
    }
    let a = q.numer().nth_root(n);
    let b = q.denom().nth_root(n);
    if num::pow(a.clone(), n as usize) == *q.numer() && num::pow(b.clone(), n as usize) == *q.denom() {
        Some(Rational::new(a, b))
    } else {
        None
    }
}

pub fn is_square(q: &Rational) -> bool {
    exact_root(q, 2).is_some()
}

/// Smallest `2^k` (k >= 0) that is at least `q`.
pub fn pow2_ceil(q: &Rational) -> Rational {
    let mut p = Rational::one();
    while &p < q {
        p *= rat(2);
    }
    p
}
