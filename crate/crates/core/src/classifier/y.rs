//! `Y_{r,s}` and `Ytilde_r`: framing of the 4-jet, possibly over a quadratic
//! field, and the real read-off.

use std::sync::Arc;

use num::{Signed, Zero};

use super::state::frame;
use super::NormalFormRecord;
use crate::arith::auto::Automorphism;
use crate::arith::bipoly::BiPoly;
use crate::arith::quad::{DiscriminantSign, ExtElem, QuadExt};
use crate::arith::rational::{pow_i, rat, sign, Rational};
use crate::arith::upoly::UPoly;
use crate::determinator::forms::factor_of_multiplicity;
use crate::error::{Error, Result};
use crate::newton::types::Family;
use crate::roots::factor::factor_rational;
use crate::roots::interval::Interval;

/// `b x^2 y^2 + d x^r + e y^s` plus terms above the polygon.
#[derive(Clone, Debug)]
pub struct YReduced {
    pub f: BiPoly<ExtElem>,
    pub r: u32,
    pub s: u32,
    pub b: Rational,
    pub d: ExtElem,
    pub e: ExtElem,
    /// `None` when the 4-jet splits over Q.
    pub field: Option<Arc<QuadExt>>,
}

type Lin = (ExtElem, ExtElem);

fn lift(q: &Rational) -> ExtElem {
    ExtElem::rational(q.clone())
}

fn rational_part(c: &ExtElem, what: &str) -> Result<Rational> {
    if c.coords().1.is_zero() {
        Ok(c.coords().0.clone())
    } else {
        Err(Error::Inconsistent(format!("{what} = {c} is not rational")))
    }
}

/// The two double linear factors of the 4-jet.
fn double_factors(h: &BiPoly<Rational>) -> Result<(Lin, Lin, Option<Arc<QuadExt>>)> {
    let root_form = |r: Rational| (lift(&-r), lift(&rat(1)));
    let (g, has_x) = factor_of_multiplicity(h, 2);
    match (has_x, g.degree()) {
        (true, Some(1)) => {
            let r = -g.coeff(0) / g.coeff(1);
            Ok(((lift(&rat(1)), lift(&rat(0))), root_form(r), None))
        }
        (false, Some(2)) => {
            let fac = factor_rational(&g)?;
            if fac.factors.len() == 2 {
                let root = |p: &UPoly<Rational>| -p.coeff(0) / p.coeff(1);
                Ok((root_form(root(&fac.factors[0].0)), root_form(root(&fac.factors[1].0)), None))
            } else {
                let k = QuadExt::from_poly(&g)?;
                let theta = k.gen();
                let p = g.coeff(1) / g.coeff(2);
                let theta2 = ExtElem::new(&k, -p, rat(-1));
                let one = ExtElem::new(&k, rat(1), rat(0));
                Ok(((-theta, one.clone()), (-theta2, one), Some(k)))
            }
        }
        _ => Err(Error::Inconsistent("4-jet is not a product of two double factors".into())),
    }
}

/// Move the double factors of the 4-jet to the axes and remove the terms
/// below the polygon, reading off `r` and `s`.
pub fn step_two(f: &BiPoly<Rational>, bound: u32) -> Result<YReduced> {
    let (l1, l2, field) = double_factors(&f.homogeneous_part(4))?;
    let keep = move |m: (u32, u32)| m.0 + m.1 <= bound;
    let mut g = frame(l1, l2)?.apply_truncated(&f.map(lift), &keep);
    let b = rational_part(&g.coeff((2, 2)), "coefficient of x^2y^2")?;
    if b.is_zero() {
        return Err(Error::Inconsistent("framed 4-jet has no x^2y^2 term".into()));
    }
    let two_b = lift(&(rat(2) * &b));
    let (mut r, mut s) = (None, None);
    for j in 5..=bound {
        if r.is_none() {
            let c = g.coeff((j - 1, 1));
            if !c.is_zero() {
                let phi = Automorphism::shift_y(BiPoly::monomial(-c / two_b.clone(), (j - 3, 0)))?;
                g = phi.apply_truncated(&g, &keep);
            }
            if !g.coeff((j, 0)).is_zero() {
                r = Some(j);
            }
        }
        if s.is_none() {
            let c = g.coeff((1, j - 1));
            if !c.is_zero() {
                let phi = Automorphism::shift_x(BiPoly::monomial(-c / two_b.clone(), (0, j - 3)))?;
                g = phi.apply_truncated(&g, &keep);
            }
            if !g.coeff((0, j)).is_zero() {
                s = Some(j);
            }
        }
        if let (Some(r), Some(s)) = (r, s) {
            let (d, e) = (g.coeff((r, 0)), g.coeff((0, s)));
            return Ok(YReduced { f: g, r, s, b, d, e, field });
        }
    }
    Err(Error::Inconsistent(format!("no pure powers up to degree {bound}")))
}

fn signed(i: &Interval, s: i32) -> Interval {
    if s < 0 {
        i.negate()
    } else {
        i.clone()
    }
}

fn alt(i: u32) -> i8 {
    if i % 2 == 1 {
        -1
    } else {
        1
    }
}

/// `z^n - c`.
fn binomial(n: u32, c: Rational) -> UPoly<Rational> {
    UPoly::from_terms([(n, rat(1)), (0, -c)])
}

fn rational_case(r0: u32, s0: u32, b: Rational, d0: Rational, e0: Rational) -> Result<Vec<NormalFormRecord>> {
    let (r, s, d, e) = if r0 % 2 == 1 && s0 % 2 == 0 { (s0, r0, e0, d0) } else { (r0, s0, d0, e0) };
    let c = pow_i(&b.abs(), -((r * s) as i64)) * pow_i(&d, 2 * s as i64) * pow_i(&e, 2 * r as i64);
    let (p, pt) = (binomial(2 * r, c.clone()), binomial(2 * s, c));
    let (s1, s2, s3) = (sign(&b) as i8, sign(&d) as i8, sign(&e) as i8);
    let i = Interval::positive();
    let yrs = Family::Y(r, s);
    let ysr = Family::Y(s, r);
    let mut out = vec![];
    match (r % 2, s % 2) {
        (0, 0) => {
            out.push(NormalFormRecord::new(yrs, vec![s1, s2], &p, signed(&i, s3 as i32))?);
            if !(r == s && s2 == s3) {
                out.push(NormalFormRecord::new(ysr, vec![s1, s3], &pt, signed(&i, s2 as i32))?);
            }
        }
        (0, 1) => {
            for k in 1..=2 {
                out.push(NormalFormRecord::new(yrs, vec![s1, s2], &p, signed(&i, alt(k) as i32))?);
                out.push(NormalFormRecord::new(ysr, vec![s1, alt(k)], &pt, signed(&i, s2 as i32))?);
            }
        }
        _ => {
            for k in 1..=2 {
                for l in 1..=2 {
                    out.push(NormalFormRecord::new(yrs, vec![s1, alt(k)], &p, signed(&i, alt(l) as i32))?);
                    if r != s {
                        out.push(NormalFormRecord::new(ysr, vec![s1, alt(k)], &pt, signed(&i, alt(l) as i32))?);
                    }
                }
            }
        }
    }
    Ok(out)
}

fn real_irrational_case(red: &YReduced) -> Result<Vec<NormalFormRecord>> {
    let r = red.r;
    if red.s != r {
        return Err(Error::Inconsistent(format!("Y{},{} over a real quadratic field", r, red.s)));
    }
    let b = &red.b;
    let sg = sign(b) as i8;
    let de = red.d.clone() * red.e.clone();
    let ty = Family::Y(r, r);
    let line = Interval::real_line();
    if r % 2 == 1 {
        let de2 = rational_part(&(de.clone() * de), "(de)^2")?;
        let p = binomial(2, pow_i(&b.abs(), -(r as i64)) * de2);
        let mut out = vec![];
        for x in [1i8, -1] {
            for k in 1..=2 {
                out.push(NormalFormRecord::new(ty, vec![sg, x], &p, signed(&Interval::positive(), alt(k) as i32))?);
            }
        }
        return Ok(out);
    }
    let de = rational_part(&de, "de")?;
    let v = pow_i(&b.abs(), -((r / 2) as i64)) * &de;
    let lin = |a: Rational| UPoly::from_coeffs(vec![-a, rat(1)]);
    if de.is_negative() {
        (1..=2)
            .map(|k| {
                let s = alt(k);
                NormalFormRecord::new(ty, vec![sg, s], &lin(rat(s as i64) * &v), line.clone())
            })
            .collect()
    } else {
        // d and e are conjugate with de > 0, so both have the sign of d + e.
        let s = sign(&rational_part(&(red.d.clone() + red.e.clone()), "d + e")?) as i8;
        Ok(vec![NormalFormRecord::new(ty, vec![sg, s], &lin(rat(s as i64) * &v), line)?])
    }
}

fn ytilde_case(red: &YReduced, f: &BiPoly<Rational>) -> Result<Vec<NormalFormRecord>> {
    let r = red.r;
    let sg = sign(&f.coeff((4, 0)));
    if sg == 0 || red.s != r {
        return Err(Error::Inconsistent("Ytilde without a definite 4-jet".into()));
    }
    let de = red.d.clone() * red.e.clone();
    let de2 = de.clone() * de;
    let q = rat(16) / &red.b;
    let ty = Family::Ytilde(r);
    let i = Interval::positive();
    if r % 2 == 1 {
        let de4 = rational_part(&(de2.clone() * de2), "(de)^4")?;
        let p = binomial(8, de4 * pow_i(&q, 2 * r as i64));
        return Ok(vec![
            NormalFormRecord::new(ty, vec![sg as i8], &p, i.clone())?,
            NormalFormRecord::new(ty, vec![sg as i8], &p, i.negate())?,
        ]);
    }
    // The rotation by pi/r flips the sign of a, so both real roots occur.
    let p = binomial(4, rational_part(&de2, "(de)^2")? * pow_i(&q, r as i64));
    Ok(vec![
        NormalFormRecord::new(ty, vec![sg as i8], &p, i.clone())?,
        NormalFormRecord::new(ty, vec![sg as i8], &p, i.negate())?,
    ])
}

/// Records for a germ of main type `Y` or `Ytilde`; `g` is a sufficient jet.
pub fn classify_y(g: &BiPoly<Rational>, bound: u32) -> Result<Vec<NormalFormRecord>> {
    let red = step_two(g, bound)?;
    match red.field.as_ref().map(|k| k.discriminant_sign()) {
        None => {
            let d = rational_part(&red.d, "d")?;
            let e = rational_part(&red.e, "e")?;
            rational_case(red.r, red.s, red.b, d, e)
        }
        Some(DiscriminantSign::Real) => real_irrational_case(&red),
        Some(DiscriminantSign::Imaginary) => ytilde_case(&red, g),
    }
}
