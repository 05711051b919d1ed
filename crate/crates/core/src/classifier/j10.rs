//! `J10`: the parameter is read from the resolvent cubic `s^3 + d s + e`
//! without adjoining its roots.

use num::{Signed, Zero};

use super::state::{flip, normalize_low_jet_exceptional};
use super::NormalFormRecord;
use crate::arith::auto::Automorphism;
use crate::arith::bipoly::BiPoly;
use crate::arith::rational::{rat, ratio, sign, Rational};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};
use crate::newton::types::{type_data, Family};
use crate::newton::weight::weighted_part;
use crate::roots::interval::Interval;
use crate::roots::sturm::{isolate_real_roots, sturm_count};

/// `p^(sigma)`, whose real roots are the `J10^sigma` parameters of
/// `x^3 + d x y^4 + e y^6` (up to sign).
pub fn j10_poly(sigma: i32, d: &Rational, e: &Rational) -> UPoly<Rational> {
    let s = rat(sigma as i64);
    let d3 = d * d * d;
    let e2 = e * e;
    UPoly::from_coeffs(vec![
        rat(-729) * &e2,
        Rational::zero(),
        &s * (rat(81) * &d3 + rat(729) * &e2),
        Rational::zero(),
        -(rat(36) * &d3 + rat(243) * &e2),
        Rational::zero(),
        &s * (rat(4) * &d3 + rat(27) * &e2),
    ])
}

/// `(d, e)` of the depressed form `x^3 + d x y^4 + e y^6` equivalent to the
/// quasihomogeneous part of `g`.
pub fn depressed(g: &BiPoly<Rational>) -> Result<(Rational, Rational)> {
    let td = type_data(Family::J10)?;
    let f = weighted_part(&normalize_low_jet_exceptional(g, &td)?.current, &td.weight, td.degree);
    let c = f.coeff((3, 0));
    let f = if c.is_negative() { flip(&f, -1, 1) } else { f };
    let f = f.scale(&c.abs().recip());
    let a = f.coeff((2, 2));
    let f = Automorphism::shift_x(BiPoly::monomial(-a / rat(3), (0, 2)))?.apply(&f);
    debug_assert!(f.coeff((2, 2)).is_zero());
    Ok((f.coeff((1, 4)), f.coeff((0, 6))))
}

pub fn classify_j10(g: &BiPoly<Rational>) -> Result<Vec<NormalFormRecord>> {
    let (d, e) = depressed(g)?;
    let k = UPoly::from_coeffs(vec![e.clone(), d.clone(), rat(0), rat(1)]);
    if k.gcd(&k.derivative()).degree() != Some(0) {
        return Err(Error::DegenerateInput("resolvent cubic has a multiple root".into()));
    }
    let pp = j10_poly(1, &d, &e);
    let pm = j10_poly(-1, &d, &e);
    let rec = |s: i8, p: &UPoly<Rational>, i: Interval| NormalFormRecord::new(Family::J10, vec![s], p, i);
    let z = UPoly::from_ints(&[0, 1]);
    let half9 = UPoly::from_coeffs(vec![ratio(-9, 2), rat(0), rat(1)]);
    // The roots of k multiply to -e, so the real root (and the parameter)
    // has the sign of -e.
    let se = -sign(&e);
    if sturm_count(&k, &Interval::real_line())? == 1 {
        let r = match se {
            1 => rec(1, &pp, Interval::positive())?,
            -1 => rec(1, &pp, Interval::negative())?,
            _ => rec(1, &z, Interval::point(rat(0)))?,
        };
        return Ok(vec![r]);
    }
    if se == 0 {
        return Ok(vec![
            rec(1, &half9, Interval::negative())?,
            rec(-1, &z, Interval::point(rat(0)))?,
            rec(1, &half9, Interval::positive())?,
        ]);
    }
    let is = isolate_real_roots(&pp)?;
    if is.len() != 4 {
        return Err(Error::Internal(format!("p+ has {} real roots", is.len())));
    }
    if se > 0 {
        Ok(vec![rec(-1, &pm, Interval::negative())?, rec(1, &pp, is[0].clone())?, rec(1, &pp, is[2].clone())?])
    } else {
        Ok(vec![rec(-1, &pm, Interval::positive())?, rec(1, &pp, is[1].clone())?, rec(1, &pp, is[3].clone())?])
    }
}
