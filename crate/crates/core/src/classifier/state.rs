//! Pipeline state, linear frames and the single-term eliminations.

use num::Zero;

use crate::arith::auto::Automorphism;
use crate::arith::bipoly::{BiPoly, Mono};
use crate::arith::field::Field;
use crate::arith::rational::{rat, Rational};
use crate::arith::upoly::UPoly;
use crate::determinator::forms::{pattern, rational_factor_of_multiplicity, Linear};
use crate::error::{Error, Result};
use crate::local::jacobian::{elimination_map, jacobian_term_division};
use crate::newton::types::TypeData;
use crate::newton::weight::{weighted_part, Weight};

#[derive(Clone, Debug, PartialEq)]
pub struct PipelineState<F: Field> {
    pub current: BiPoly<F>,
    /// The input germ, kept for real sign tests.
    pub original: BiPoly<Rational>,
    pub type_data: TypeData,
}

/// Linear change making `l1` the new `x` and `l2` the new `y`.
pub fn frame<F: Field>(l1: (F, F), l2: (F, F)) -> Result<Automorphism<F>> {
    let det = l1.0.clone() * l2.1.clone() - l1.1.clone() * l2.0.clone();
    if det.is_zero() {
        return Err(Error::InvalidAutomorphism("dependent linear forms".into()));
    }
    Automorphism::linear(l2.1.clone() / det.clone(), -l1.1.clone() / det.clone(), -l2.0.clone() / det.clone(), l1.0 / det)
}

/// Frame sending `l` to `x`, completed by `y` (or by `x` when `l` is a
/// multiple of `y`).
fn frame_one(l: &Linear) -> Result<Automorphism<Rational>> {
    if !l.0.is_zero() {
        frame(l.clone(), (rat(0), rat(1)))
    } else {
        frame(l.clone(), (rat(1), rat(0)))
    }
}

/// Move the multiple linear factors of the lowest jet onto the axes, so that
/// the lowest jet becomes `c x^a` or `c x^a y^b`.
pub fn normalize_low_jet_exceptional(f: &BiPoly<Rational>, td: &TypeData) -> Result<PipelineState<Rational>> {
    let g = f.homogeneous_part(td.low_jet_degree);
    let pat = pattern(&g);
    let mismatch = || Error::Inconsistent(format!("low jet pattern {pat:?} for {:?}", td.family));
    let phi = match pat.as_slice() {
        [a] => frame_one(&rational_factor_of_multiplicity(&g, *a).ok_or_else(mismatch)?)?,
        [a, b] if a > b => {
            let f1 = rational_factor_of_multiplicity(&g, *a).ok_or_else(mismatch)?;
            let f2 = rational_factor_of_multiplicity(&g, *b).ok_or_else(mismatch)?;
            frame(f1, f2)?
        }
        _ => return Err(mismatch()),
    };
    Ok(PipelineState { current: phi.apply(f), original: f.clone(), type_data: td.clone() })
}

/// Bring the 4-jet of an `X_{9+k}` germ to `a0 x^4 + a2 x^2 y^2`.
pub fn normalize_low_jet_x9k(f: &BiPoly<Rational>, td: &TypeData) -> Result<PipelineState<Rational>> {
    let g = f.homogeneous_part(4);
    let l = rational_factor_of_multiplicity(&g, 2)
        .ok_or_else(|| Error::Inconsistent(format!("4-jet pattern {:?} for X9+k", pattern(&g))))?;
    let h = frame_one(&l)?.apply(f);
    let (a1, a2) = (h.coeff((3, 1)), h.coeff((2, 2)));
    if a2.is_zero() {
        return Err(Error::Inconsistent("X9+k without x^2y^2".into()));
    }
    let shear = Automorphism::linear(rat(1), rat(0), -a1 / (rat(2) * a2), rat(1))?;
    Ok(PipelineState { current: shear.apply(&h), original: f.clone(), type_data: td.clone() })
}

/// One application of the term elimination: `x -> x - t/m_x` or
/// `y -> y - t/m_y`, with `m_x`, `m_y` taken from `f0`. Terms outside `keep`
/// are discarded.
pub fn eliminate_term<F: Field>(
    f: &BiPoly<F>,
    f0: &BiPoly<F>,
    t: Mono,
    grading: Option<&Weight>,
    keep: &dyn Fn(Mono) -> bool,
) -> Result<BiPoly<F>> {
    let c = f.coeff(t);
    let (axis, q) = jacobian_term_division(f0, (t, &c), grading)
        .ok_or_else(|| Error::Inconsistent(format!("term {} not divisible by m_x or m_y", crate::arith::bipoly::fmt_mono(t))))?;
    let phi = elimination_map(axis, &q)?;
    let g = phi.apply_truncated(f, keep);
    debug_assert!(g.coeff(t).is_zero());
    Ok(g)
}

/// The state's piecewise quasihomogeneous part.
pub fn principal_part<F: Field>(f: &BiPoly<F>, td: &TypeData) -> BiPoly<F> {
    weighted_part(f, &td.weight, td.degree)
}

/// Remove the double root of the (2,1)-initial cubic of a `J_{10+k}` germ
/// by `x -> x + q y^2`.
pub fn kill_double_root_j10k(f: &BiPoly<Rational>) -> Result<BiPoly<Rational>> {
    let k = UPoly::from_coeffs(vec![f.coeff((0, 6)), f.coeff((1, 4)), f.coeff((2, 2)), f.coeff((3, 0))]);
    if k.degree() != Some(3) {
        return Err(Error::Inconsistent("no x^3 term".into()));
    }
    let g = k.gcd(&k.derivative());
    match g.degree() {
        Some(1) => {
            let q = -g.coeff(0) / g.coeff(1);
            let phi = Automorphism::shift_x(BiPoly::monomial(q, (0, 2)))?;
            Ok(phi.apply(f))
        }
        Some(2) => Err(Error::Inconsistent("triple root of the initial cubic".into())),
        _ => Err(Error::DegenerateInput("the initial cubic has no double root".into())),
    }
}

/// Sign flips `x -> e1 x`, `y -> e2 y`.
pub fn flip<F: Field>(f: &BiPoly<F>, e1: i8, e2: i8) -> BiPoly<F> {
    BiPoly::from_terms(f.terms().map(|(m, c)| {
        let s = (if e1 < 0 && m.0 % 2 == 1 { -1 } else { 1 }) * (if e2 < 0 && m.1 % 2 == 1 { -1 } else { 1 });
        (m, if s < 0 { -c.clone() } else { c.clone() })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::ratio;
    use crate::newton::types::{type_data, Family};

    fn q(ts: &[((u32, u32), i64)]) -> BiPoly<Rational> {
        BiPoly::from_int_terms(ts)
    }

    #[test]
    fn alg1_branches() {
        let td = type_data(Family::E14).unwrap();
        // (x+y)^3 + y^8
        let f = &q(&[((1, 0), 1), ((0, 1), 1)]).pow(3) + &q(&[((0, 8), 1)]);
        let s = normalize_low_jet_exceptional(&f, &td).unwrap();
        assert_eq!(s.current.homogeneous_part(3), q(&[((3, 0), 1)]));
        let s = normalize_low_jet_exceptional(&q(&[((0, 3), 1), ((8, 0), 1)]), &td).unwrap();
        assert_eq!(s.current, q(&[((3, 0), 1), ((0, 8), 1)]));
        let tz = type_data(Family::Z11).unwrap();
        let f = q(&[((3, 1), 1), ((0, 5), 1), ((1, 4), 1)]);
        assert_eq!(normalize_low_jet_exceptional(&f, &tz).unwrap().current, f);
    }

    #[test]
    fn alg2_shear() {
        let td = type_data(Family::X9k(3)).unwrap();
        // (x+y)^2 (x^2+y^2) + y^7
        let f = &(&q(&[((1, 0), 1), ((0, 1), 1)]).pow(2) * &q(&[((2, 0), 1), ((0, 2), 1)])) + &q(&[((0, 7), 1)]);
        let s = normalize_low_jet_x9k(&f, &td).unwrap();
        let j = s.current.homogeneous_part(4);
        assert!(j.support().iter().all(|m| *m == (4, 0) || *m == (2, 2)));
        // y^2 (x^2+xy+y^2): the swap branch.
        let f = &q(&[((0, 2), 1)]) * &q(&[((2, 0), 1), ((1, 1), 1), ((0, 2), 1)]);
        let s = normalize_low_jet_x9k(&(&f + &q(&[((7, 0), 1)])), &td).unwrap();
        assert!(s.current.homogeneous_part(4).support().iter().all(|m| *m == (4, 0) || *m == (2, 2)));
    }

    #[test]
    fn term_elimination() {
        let td = type_data(Family::E14).unwrap();
        let f = q(&[((3, 0), 1), ((0, 8), 1), ((2, 3), 1)]);
        let g = eliminate_term(&f, &principal_part(&f, &td), (2, 3), None, &|_| true).unwrap();
        let want = BiPoly::from_terms([
            ((3, 0), rat(1)),
            ((0, 8), rat(1)),
            ((1, 6), ratio(-1, 3)),
            ((0, 9), ratio(2, 27)),
        ]);
        assert_eq!(g, want);
        let f = q(&[((3, 0), 1), ((0, 8), 1), ((1, 7), 1)]);
        let g = eliminate_term(&f, &principal_part(&f, &td), (1, 7), None, &|_| true).unwrap();
        assert!(g.coeff((1, 7)).is_zero());
        let ty = type_data(Family::Y(5, 5)).unwrap();
        let f = q(&[((2, 2), 1), ((5, 0), 1), ((0, 5), 1), ((4, 1), 1)]);
        let g = eliminate_term(&f, &principal_part(&f, &ty), (4, 1), Some(&ty.weight), &|_| true).unwrap();
        assert!(g.coeff((4, 1)).is_zero());
        // y -> y - x^2/2
        assert_eq!(g.coeff((6, 0)), ratio(-1, 4));
    }

    #[test]
    fn double_root() {
        // k = s^3 - 3 s + 2 = (s-1)^2 (s+2)
        let f = q(&[((3, 0), 1), ((1, 4), -3), ((0, 6), 2), ((0, 7), 1)]);
        let g = kill_double_root_j10k(&f).unwrap();
        assert!(g.coeff((1, 4)).is_zero() && g.coeff((0, 6)).is_zero());
        assert_eq!(g.coeff((2, 2)), rat(3));
        let f = q(&[((3, 0), 1), ((1, 4), 1), ((0, 7), 1)]);
        assert!(matches!(kill_double_root_j10k(&f), Err(Error::DegenerateInput(_))));
        let f = q(&[((3, 0), 1), ((2, 2), 1), ((0, 7), 1)]);
        assert_eq!(kill_double_root_j10k(&f).unwrap(), f);
    }

    #[test]
    fn frame_inverts() {
        let phi = frame((rat(2), rat(1)), (rat(1), rat(1))).unwrap();
        let l1 = q(&[((1, 0), 2), ((0, 1), 1)]);
        let l2 = q(&[((1, 0), 1), ((0, 1), 1)]);
        assert_eq!(phi.apply(&l1), BiPoly::x());
        assert_eq!(phi.apply(&l2), BiPoly::y());
    }
}
