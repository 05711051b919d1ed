//! Local invariants of plane curve germs: corank, Milnor number, Jacobian
//! term division and graded reduction, plus a small Groebner engine.

pub mod bigcd;
pub mod groebner;
pub mod jacobian;
pub mod linalg;
pub mod mora;

use std::fmt;

use num::Zero;

use crate::arith::bipoly::BiPoly;
use crate::arith::rational::{rat, Rational};
use crate::error::{Error, Result};

pub use groebner::{groebner_basis, MPoly, MonomialOrder};
pub use jacobian::{elimination_map, jacobian_term_division, reduce_mod_jacobian_graded, Axis, GradedReduction};

/// Generators of an ideal of the local ring at the origin.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalIdeal {
    pub generators: Vec<BiPoly<Rational>>,
}

impl LocalIdeal {
    pub fn jacobian(f: &BiPoly<Rational>) -> Self {
        LocalIdeal { generators: vec![f.deriv_x(), f.deriv_y()].into_iter().filter(|g| !g.is_zero()).collect() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Milnor {
    Finite(u32),
    Infinite,
}

impl Milnor {
    pub fn finite(self) -> Option<u32> {
        match self {
            Milnor::Finite(m) => Some(m),
            Milnor::Infinite => None,
        }
    }
}

impl fmt::Display for Milnor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Milnor::Finite(m) => write!(f, "{m}"),
            Milnor::Infinite => write!(f, "infinite"),
        }
    }
}

/// `2 - rank` of the Hessian at the origin.
pub fn corank(f: &BiPoly<Rational>) -> Result<u32> {
    if !f.coeff((0, 0)).is_zero() || !f.coeff((1, 0)).is_zero() || !f.coeff((0, 1)).is_zero() {
        return Err(Error::NotSingular);
    }
    let (a, b, c) = (f.coeff((2, 0)), f.coeff((1, 1)), f.coeff((0, 2)));
    if a.is_zero() && b.is_zero() && c.is_zero() {
        return Ok(2);
    }
    let det = rat(4) * &a * &c - &b * &b;
    Ok(if det.is_zero() { 1 } else { 0 })
}

/// Step budget for a single standard basis computation.
pub const MORA_STEP_CAP: usize = 200_000;
const MAX_CAP: u32 = 512;

/// Milnor number at the origin via local standard bases of the Jacobian
/// ideal modulo growing powers of the maximal ideal.
pub fn milnor_number(f: &BiPoly<Rational>) -> Milnor {
    if !f.coeff((1, 0)).is_zero() || !f.coeff((0, 1)).is_zero() {
        return Milnor::Finite(0);
    }
    let (fx, fy) = (f.deriv_x(), f.deriv_y());
    if fx.is_zero() || fy.is_zero() || bigcd::common_factor_through_origin(&fx, &fy) {
        return Milnor::Infinite;
    }
    let mut cap = (2 * f.order().unwrap_or(2)).max(8);
    while cap <= MAX_CAP {
        match mora::local_dimension(&[fx.clone(), fy.clone()], cap, MORA_STEP_CAP) {
            Some(d) if (d as u32) < cap => return Milnor::Finite(d as u32),
            Some(_) => cap *= 2,
            None => return Milnor::Infinite,
        }
    }
    Milnor::Infinite
}

/// Brute-force `dim Q[x,y] / (J + m^cap)` by linear algebra on monomials.
pub fn truncated_quotient_dimension(f: &BiPoly<Rational>, cap: u32) -> usize {
    let mons: Vec<(u32, u32)> = (0..cap).flat_map(|d| (0..=d).map(move |i| (i, d - i))).collect();
    let idx = |m: (u32, u32)| mons.iter().position(|n| *n == m);
    let mut rows = vec![];
    for g in [f.deriv_x(), f.deriv_y()] {
        for &m in &mons {
            let h = g.mul_mono(m);
            let mut row = vec![Rational::zero(); mons.len()];
            let mut any = false;
            for (t, c) in h.terms() {
                if let Some(k) = idx(t) {
                    row[k] = c.clone();
                    any = true;
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    mons.len() - linalg::rank(rows)
}
