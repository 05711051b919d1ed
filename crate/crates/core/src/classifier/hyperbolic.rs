//! `X_{9+k}` and `J_{10+k}`: two-face sweep, then a scaling read-off.

use num::{Signed, Zero};

use super::state::{eliminate_term, kill_double_root_j10k, normalize_low_jet_exceptional, normalize_low_jet_x9k, principal_part};
use super::NormalFormRecord;
use crate::arith::bipoly::{fmt_mono, BiPoly, Mono};
use crate::arith::rational::{pow_i, rat, sign, Rational};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};
use crate::newton::types::{polygon_position, type_data, Family, Position, TypeData};
use crate::roots::interval::Interval;

/// Remove `x y^(j-1)` and `x^(j-1) y` below or on the polygon, degree by
/// degree, and check that nothing else is left underneath.
fn sweep(f: BiPoly<Rational>, td: &TypeData, bound: u32) -> Result<BiPoly<Rational>> {
    let keep = move |m: Mono| m.0 + m.1 <= bound;
    let mut g = f.filter(keep);
    for j in 5..=bound {
        for t in [(1, j - 1), (j - 1, 1)] {
            if g.coeff(t).is_zero() || polygon_position(td, t) == Position::Above {
                continue;
            }
            let f0 = principal_part(&g, td);
            g = eliminate_term(&g, &f0, t, Some(&td.weight), &keep)?;
        }
    }
    if let Some(m) = g.support().into_iter().find(|m| polygon_position(td, *m) == Position::Below) {
        return Err(Error::Inconsistent(format!("term {} left below the polygon", fmt_mono(m))));
    }
    Ok(principal_part(&g, td))
}

/// `sign(b2) (0, inf)`, and its negative when `y -> -y` flips the parameter.
fn intervals(b2: &Rational, odd: bool) -> Vec<Interval> {
    let i1 = if b2.is_positive() { Interval::positive() } else { Interval::negative() };
    if odd {
        vec![i1.clone(), i1.negate()]
    } else {
        vec![i1]
    }
}

fn nonzero(c: Rational, what: &str) -> Result<Rational> {
    if c.is_zero() {
        Err(Error::DegenerateInput(format!("vanishing coefficient of {what}")))
    } else {
        Ok(c)
    }
}

pub fn classify_x9k(g: &BiPoly<Rational>, k: u32, bound: u32) -> Result<Vec<NormalFormRecord>> {
    let family = Family::X9k(k);
    let td = type_data(family)?;
    let f = sweep(normalize_low_jet_x9k(g, &td)?.current, &td, bound)?;
    let m = 4 + k;
    let b0 = nonzero(f.coeff((4, 0)), "x^4")?;
    let b1 = nonzero(f.coeff((2, 2)), "x^2y^2")?;
    let b2 = nonzero(f.coeff((0, m)), "the pure y power")?;
    let signs = vec![sign(&b0) as i8, sign(&b1) as i8];
    // a^4 = b2^4 (|b0| / b1^2)^m
    let c = pow_i(&b2, 4) * pow_i(&(b0.abs() / (&b1 * &b1)), m as i64);
    let p = UPoly::from_terms([(4, rat(1)), (0, -c)]);
    intervals(&b2, m % 2 == 1)
        .into_iter()
        .map(|i| NormalFormRecord::new(family, signs.clone(), &p, i))
        .collect()
}

pub fn classify_j10k(g: &BiPoly<Rational>, k: u32, bound: u32) -> Result<Vec<NormalFormRecord>> {
    let family = Family::J10k(k);
    let td = type_data(family)?;
    let framed = normalize_low_jet_exceptional(g, &td)?.current;
    let f = sweep(kill_double_root_j10k(&framed)?, &td, bound)?;
    let m = 6 + k;
    let c3 = nonzero(f.coeff((3, 0)), "x^3")?;
    let b1 = nonzero(f.coeff((2, 2)), "x^2y^2")?;
    let b2 = nonzero(f.coeff((0, m)), "the pure y power")?;
    // a^6 = b2^6 |c3|^(2m) |b1|^(-3m)
    let c = pow_i(&b2, 6) * pow_i(&c3.abs(), 2 * m as i64) * pow_i(&b1.abs(), -3 * m as i64);
    let p = UPoly::from_terms([(6, rat(1)), (0, -c)]);
    // x -> -x makes the cube positive and leaves y^m alone.
    intervals(&b2, m % 2 == 1)
        .into_iter()
        .map(|i| NormalFormRecord::new(family, vec![sign(&b1) as i8], &p, i))
        .collect()
}
