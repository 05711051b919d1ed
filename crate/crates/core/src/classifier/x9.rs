//! `X9`: two normal form equations per class. Candidate parameters come from
//! `p^(sigma)`; the real candidate pair is picked by the sign of the sextic
//! invariant of the quartic.

use num::Zero;

use super::NormalFormRecord;
use crate::arith::auto::Automorphism;
use crate::arith::bipoly::BiPoly;
use crate::arith::rational::{rat, sign, Rational};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};
use crate::newton::types::Family;
use crate::roots::algebraic::{minpoly_in_interval, AlgebraicNumber};
use crate::roots::interval::Interval;
use crate::roots::sturm::sturm_count;

/// Invariants `(I, J)` of the binary quartic `A x^4 + B x^3y + C x^2y^2 + D xy^3 + E y^4`.
pub fn invariants(f4: &BiPoly<Rational>) -> (Rational, Rational) {
    let [a, b, c, d, e] = [(4, 0), (3, 1), (2, 2), (1, 3), (0, 4)].map(|m| f4.coeff(m));
    let i = rat(12) * &a * &e - rat(3) * &b * &d + &c * &c;
    let j = rat(72) * &a * &c * &e + rat(9) * &b * &c * &d
        - rat(27) * &a * &d * &d
        - rat(27) * &e * &b * &b
        - rat(2) * &c * &c * &c;
    (i, j)
}

/// Whether `s1 x^4 + a x^2y^2 + s2 y^4` has the real invariant signs of `f4`.
pub fn x9_real_solvable(f4: &BiPoly<Rational>, signs: (i8, i8), a: &AlgebraicNumber) -> bool {
    let (i_f, j_f) = invariants(f4);
    let s = rat((signs.0 * signs.1) as i64);
    // I_g = 12 s + a^2, J_g = 72 s a - 2 a^3
    let ig = UPoly::from_coeffs(vec![rat(12) * &s, rat(0), rat(1)]);
    let jg = UPoly::from_coeffs(vec![rat(0), rat(72) * &s, rat(0), rat(-2)]);
    a.sign_of(&jg) == sign(&j_f) && a.sign_of(&ig) == sign(&i_f)
}

/// `p^(sigma)` for `b x^4 + c x^2y^2 + d xy^3 + e y^4`.
pub fn p_sigma(sigma: i32, b: &Rational, c: &Rational, d: &Rational, e: &Rational) -> UPoly<Rational> {
    let s = rat(sigma as i64);
    let r = |n: i64| rat(n);
    let pw = |x: &Rational, k: usize| num::pow(x.clone(), k);
    let (b2, b3, c2, c3, c4, c6, d2, d4, e2, e3) =
        (pw(b, 2), pw(b, 3), pw(c, 2), pw(c, 3), pw(c, 4), pw(c, 6), pw(d, 2), pw(d, 4), pw(e, 2), pw(e, 3));
    let z6 = r(-256) * &b3 * &e3 + r(128) * &b2 * &c2 * &e2 - r(144) * &b2 * c * &d2 * e + r(27) * &b2 * &d4
        - r(16) * b * &c4 * e
        + r(4) * b * &c3 * &d2;
    let z4 = r(18432) * &b3 * &e3 + r(11520) * &b2 * &c2 * &e2 - r(5184) * &b2 * c * &d2 * e + r(972) * &b2 * &d4
        + r(144) * b * &c3 * &d2
        + r(16) * &c6;
    let z2 = r(-331776) * &b3 * &e3 - r(62208) * &b2 * c * &d2 * e + r(11664) * &b2 * &d4 - r(11520) * b * &c4 * e
        + r(1728) * b * &c3 * &d2
        - r(128) * &c6;
    let z0 = r(331776) * &b2 * &c2 * &e2 - r(248832) * &b2 * c * &d2 * e + r(46656) * &b2 * &d4 - r(18432) * b * &c4 * e
        + r(6912) * b * &c3 * &d2
        + r(256) * &c6;
    UPoly::from_coeffs(vec![&s * z0, r(0), z2, r(0), &s * z4, r(0), z6])
}

/// 4-jet with nonzero `x^4` and no `x^3y` term.
fn normalize(f4: &BiPoly<Rational>) -> Result<BiPoly<Rational>> {
    let mut g = f4.clone();
    if g.coeff((4, 0)).is_zero() {
        let mut cands = vec![Automorphism::swap()];
        for k in 1..=3 {
            cands.push(Automorphism::linear(rat(1), rat(0), rat(k), rat(1))?);
        }
        g = cands
            .iter()
            .map(|phi| phi.apply(f4))
            .find(|h| !h.coeff((4, 0)).is_zero())
            .ok_or_else(|| Error::DegenerateInput("4-jet vanishes on too many lines".into()))?;
    }
    let shift = -g.coeff((3, 1)) / (rat(4) * g.coeff((4, 0)));
    let g = Automorphism::linear(rat(1), shift, rat(0), rat(1))?.apply(&g);
    debug_assert!(g.coeff((3, 1)).is_zero());
    Ok(g)
}

fn closed_open(a: i64, b: i64) -> Interval {
    Interval::new(Some(rat(a)), Some(rat(b)), true, false)
}

fn open_closed(a: Option<i64>, b: i64) -> Interval {
    Interval::new(a.map(rat), Some(rat(b)), false, true)
}

fn open(a: Option<i64>, b: Option<i64>) -> Interval {
    Interval::new(a.map(rat), b.map(rat), false, false)
}

pub fn classify_x9(g: &BiPoly<Rational>) -> Result<Vec<NormalFormRecord>> {
    let f4 = g.homogeneous_part(4);
    let h = normalize(&f4)?;
    let [b, c, d, e] = [(4, 0), (2, 2), (1, 3), (0, 4)].map(|m| h.coeff(m));
    let pp = p_sigma(1, &b, &c, &d, &e);
    let pm = p_sigma(-1, &b, &c, &d, &e);
    let quartic = UPoly::from_coeffs(vec![e.clone(), d.clone(), c.clone(), rat(0), b.clone()]);
    let roots = sturm_count(&quartic, &Interval::real_line())?;
    // The first option is taken when its candidate exists and is realized
    // over the reals.
    let pick = |p: &UPoly<Rational>, signs: (i8, i8), first: Interval| -> bool {
        minpoly_in_interval(p, &first).is_ok_and(|a| x9_real_solvable(&f4, signs, &a))
    };
    let rec = |signs: (i8, i8), p: &UPoly<Rational>, i: Interval| NormalFormRecord::new(Family::X9, vec![signs.0, signs.1], p, i);
    match roots {
        0 if b > Rational::zero() => {
            let (i1, i2) = if pick(&pp, (1, 1), closed_open(0, 2)) {
                (closed_open(0, 2), open_closed(Some(2), 6))
            } else {
                (open(Some(-2), Some(0)), open(Some(6), None))
            };
            Ok(vec![rec((1, 1), &pp, i1)?, rec((1, 1), &pp, i2)?])
        }
        0 => {
            let (i1, i2) = if pick(&pp, (-1, -1), open_closed(Some(-2), 0)) {
                (closed_open(-6, -2), open_closed(Some(-2), 0))
            } else {
                (open(None, Some(-6)), open(Some(0), Some(2)))
            };
            Ok(vec![rec((-1, -1), &pp, i1)?, rec((-1, -1), &pp, i2)?])
        }
        2 => {
            let i = if pick(&pm, (1, -1), Interval::non_positive()) { Interval::non_positive() } else { Interval::positive() };
            Ok(vec![rec((1, -1), &pm, i.clone())?, rec((-1, 1), &pm, i)?])
        }
        4 => {
            let (i1, i2) = if pick(&pp, (1, 1), open_closed(None, -6)) {
                (open_closed(None, -6), open_closed(Some(2), 6))
            } else {
                (open(Some(-6), Some(-2)), open(Some(6), None))
            };
            Ok(vec![rec((1, 1), &pp, i1)?, rec((-1, -1), &pp, i2)?])
        }
        n => Err(Error::DegenerateInput(format!("quartic with {n} distinct real roots"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;

    fn q(ts: &[((u32, u32), i64)]) -> BiPoly<Rational> {
        BiPoly::from_int_terms(ts)
    }

    fn nf(s1: i64, a: Rational, s2: i64) -> BiPoly<Rational> {
        BiPoly::from_terms([((4, 0), rat(s1)), ((2, 2), a), ((0, 4), rat(s2))])
    }

    fn has(rs: &[NormalFormRecord], s: (i8, i8), a: &Rational) -> bool {
        rs.iter().any(|r| r.ty.signs == vec![s.0, s.1] && r.parameter.contains_rational(a))
    }

    #[test]
    fn invariants_scale() {
        let f = nf(1, rat(3), 1);
        let phi = Automorphism::linear(rat(1), rat(1), rat(1), rat(-1)).unwrap();
        let g = phi.apply(&f);
        assert_eq!(g, q(&[((4, 0), 5), ((2, 2), 6), ((0, 4), 5)]));
        let (i0, j0) = invariants(&f);
        let (i1, j1) = invariants(&g);
        // det = -2
        assert_eq!(i1, i0 * rat(16));
        assert_eq!(j1, j0 * rat(64));
    }

    #[test]
    fn p_sigma_vanishes_at_normal_forms() {
        for (s1, a, s2) in [(1, ratio(1, 3), 1), (-1, rat(7), -1), (1, rat(-3), -1), (-1, ratio(5, 2), 1)] {
            let sigma = (s1 * s2) as i32;
            let p = p_sigma(sigma, &rat(s1), &a, &rat(0), &rat(s2));
            assert!(p.eval(&a).is_zero(), "{s1} {a} {s2}");
        }
    }

    #[test]
    fn rotated_quartic() {
        let rs = classify_x9(&q(&[((4, 0), 5), ((2, 2), 6), ((0, 4), 5)])).unwrap();
        assert_eq!(rs.len(), 2);
        assert!(has(&rs, (1, 1), &ratio(6, 5)));
        assert!(has(&rs, (1, 1), &rat(3)));
    }

    #[test]
    fn four_cases() {
        for (s1, a, s2) in [
            (1, rat(0), 1),
            (1, rat(-1), 1),
            (1, rat(7), 1),
            (-1, rat(1), -1),
            (-1, rat(-3), -1),
            (1, rat(0), -1),
            (1, rat(5), -1),
            (-1, rat(-2), 1),
            (1, rat(-7), 1),
            (-1, rat(4), -1),
        ] {
            let rs = classify_x9(&nf(s1, a.clone(), s2)).unwrap();
            assert_eq!(rs.len(), 2);
            assert!(has(&rs, (s1 as i8, s2 as i8), &a), "{s1} {a} {s2}: {rs:?}");
        }
    }

    #[test]
    fn missing_x4() {
        // x^3 y + x y^3 + x^2 y^2 has no x^4 and no y^4
        let rs = classify_x9(&q(&[((3, 1), 1), ((1, 3), 1), ((2, 2), 3)]));
        assert!(rs.is_ok());
    }
}
