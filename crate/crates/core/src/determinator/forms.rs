//! Binary forms: factorization patterns and rational linear factors.

use num::Zero;

use crate::arith::bipoly::BiPoly;
use crate::arith::rational::Rational;
use crate::arith::upoly::UPoly;
use crate::roots::factor::squarefree_decomposition;
use crate::roots::interval::Interval;
use crate::roots::sturm::sturm_count;

/// Linear form `a x + b y`.
pub type Linear = (Rational, Rational);

/// Degree of a nonzero form.
pub fn form_degree(f: &BiPoly<Rational>) -> u32 {
    f.total_degree().unwrap_or(0)
}

/// Multiplicity of the factor `x` (root at infinity of `F(1, t)`).
pub fn deficiency(f: &BiPoly<Rational>) -> u32 {
    form_degree(f) - f.dehomogenize().degree().unwrap_or(0)
}

/// Multiplicities of the distinct complex linear factors, descending.
pub fn pattern(f: &BiPoly<Rational>) -> Vec<u32> {
    let mut out = vec![];
    let d = deficiency(f);
    if d > 0 {
        out.push(d);
    }
    for (g, m) in squarefree_decomposition(&f.dehomogenize()) {
        for _ in 0..g.degree().unwrap() {
            out.push(m);
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Real linear factors counted with multiplicity.
pub fn real_factor_count(f: &BiPoly<Rational>) -> usize {
    let mut n = deficiency(f) as usize;
    for (g, m) in squarefree_decomposition(&f.dehomogenize()) {
        n += m as usize * sturm_count(&g, &Interval::real_line()).unwrap();
    }
    n
}

/// The rational linear factor of multiplicity exactly `m`, if unique.
pub fn rational_factor_of_multiplicity(f: &BiPoly<Rational>, m: u32) -> Option<Linear> {
    if deficiency(f) == m {
        return Some((Rational::from_integer(1.into()), Rational::zero()));
    }
    squarefree_decomposition(&f.dehomogenize())
        .into_iter()
        .find(|(g, k)| *k == m && g.degree() == Some(1))
        .map(|(g, _)| {
            // g = t - r  ->  factor y - r x
            let r = -g.coeff(0) / g.coeff(1);
            (-r, Rational::from_integer(1.into()))
        })
}

/// The squarefree part of multiplicity `m` as a polynomial in `t = y/x`,
/// together with whether `x` itself is a factor of that multiplicity.
pub fn factor_of_multiplicity(f: &BiPoly<Rational>, m: u32) -> (UPoly<Rational>, bool) {
    let g = squarefree_decomposition(&f.dehomogenize())
        .into_iter()
        .find(|(_, k)| *k == m)
        .map(|(g, _)| g)
        .unwrap_or_else(UPoly::one);
    (g, deficiency(f) == m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    fn q(ts: &[((u32, u32), i64)]) -> BiPoly<Rational> {
        BiPoly::from_int_terms(ts)
    }

    #[test]
    fn patterns() {
        assert_eq!(pattern(&q(&[((4, 0), 1), ((0, 4), 1)])), vec![1, 1, 1, 1]);
        assert_eq!(pattern(&q(&[((4, 0), 1), ((2, 2), 1)])), vec![2, 1, 1]);
        assert_eq!(pattern(&q(&[((2, 2), 1)])), vec![2, 2]);
        assert_eq!(pattern(&q(&[((3, 1), 1)])), vec![3, 1]);
        assert_eq!(pattern(&q(&[((0, 4), 1)])), vec![4]);
        // (x+y)^3
        assert_eq!(pattern(&q(&[((3, 0), 1), ((2, 1), 3), ((1, 2), 3), ((0, 3), 1)])), vec![3]);
    }

    #[test]
    fn real_counts() {
        // (x^2+y^2)^2 has no real linear factors; x^2 y^2 has four.
        assert_eq!(real_factor_count(&q(&[((4, 0), 1), ((2, 2), 2), ((0, 4), 1)])), 0);
        assert_eq!(real_factor_count(&q(&[((2, 2), 1)])), 4);
        assert_eq!(
            rational_factor_of_multiplicity(&q(&[((3, 0), 1), ((2, 1), 3), ((1, 2), 3), ((0, 3), 1)]), 3),
            Some((rat(1), rat(1)))
        );
    }
}
