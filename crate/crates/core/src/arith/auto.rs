use super::bipoly::{BiPoly, Mono};

use super::field::Field;
use crate::error::{Error, Result};

/// Local coordinate change `x -> x_image, y -> y_image`.
#[derive(Clone, Debug, PartialEq)]
pub struct Automorphism<F: Field> {
    x_image: BiPoly<F>,
    y_image: BiPoly<F>,
}

impl<F: Field> Automorphism<F> {
    pub fn new(x_image: BiPoly<F>, y_image: BiPoly<F>) -> Result<Self> {
        if !x_image.coeff((0, 0)).is_zero() || !y_image.coeff((0, 0)).is_zero() {
            return Err(Error::InvalidAutomorphism("image with nonzero constant term".into()));
        }
        let det = x_image.coeff((1, 0)) * y_image.coeff((0, 1)) - x_image.coeff((0, 1)) * y_image.coeff((1, 0));
        if det.is_zero() {
            return Err(Error::InvalidAutomorphism("singular linear part".into()));
        }
        Ok(Automorphism { x_image, y_image })
    }

    pub fn identity() -> Self {
        Automorphism { x_image: BiPoly::x(), y_image: BiPoly::y() }
    }

    /// `x -> a x + b y`, `y -> c x + d y`.
    pub fn linear(a: F, b: F, c: F, d: F) -> Result<Self> {
        let xi = BiPoly::from_terms([((1, 0), a), ((0, 1), b)]);
        let yi = BiPoly::from_terms([((1, 0), c), ((0, 1), d)]);
        Self::new(xi, yi)
    }

    /// `x -> x + h`, `y -> y` where `h` has no constant or linear x term.
    pub fn shift_x(h: BiPoly<F>) -> Result<Self> {
        Self::new(&BiPoly::x() + &h, BiPoly::y())
    }

    pub fn shift_y(h: BiPoly<F>) -> Result<Self> {
        Self::new(BiPoly::x(), &BiPoly::y() + &h)
    }

    pub fn swap() -> Self {
        Automorphism { x_image: BiPoly::y(), y_image: BiPoly::x() }
    }

    pub fn x_image(&self) -> &BiPoly<F> {
        &self.x_image
    }

    pub fn y_image(&self) -> &BiPoly<F> {
        &self.y_image
    }

    pub fn apply(&self, f: &BiPoly<F>) -> BiPoly<F> {
        self.apply_truncated(f, &|_| true)
    }

    /// Substitution discarding monomials rejected by `keep` (which must be
    /// closed under taking divisors).
    pub fn apply_truncated(&self, f: &BiPoly<F>, keep: &dyn Fn(Mono) -> bool) -> BiPoly<F> {
        let (mut mi, mut mj) = (0, 0);
        for ((i, j), _) in f.terms() {
            mi = mi.max(i);
            mj = mj.max(j);
        }
        let powers = |base: &BiPoly<F>, n: u32| {
            let mut v = vec![BiPoly::one()];
            for k in 0..n as usize {
                let next = v[k].mul_trunc(base, keep);
                v.push(next);
            }
            v
        };
        let xp = powers(&self.x_image, mi);
        let yp = powers(&self.y_image, mj);
        let mut r = BiPoly::zero();
        for ((i, j), c) in f.terms() {
            let t = xp[i as usize].mul_trunc(&yp[j as usize], keep);
            for (m, a) in t.terms() {
                r.add_term(m, a.clone() * c.clone());
            }
        }
        r
    }

    /// The map `g` with `g.apply(f) == self.apply(inner.apply(f))`.
    pub fn compose(&self, inner: &Self) -> Self {
        Automorphism { x_image: self.apply(&inner.x_image), y_image: self.apply(&inner.y_image) }
    }

    pub fn is_linear(&self) -> bool {
        self.x_image.terms().chain(self.y_image.terms()).all(|((i, j), _)| i + j == 1)
    }

    /// Inverse of a linear automorphism.
    pub fn linear_inverse(&self) -> Option<Self> {
        if !self.is_linear() {
            return None;
        }
        let (a, b) = (self.x_image.coeff((1, 0)), self.x_image.coeff((0, 1)));
        let (c, d) = (self.y_image.coeff((1, 0)), self.y_image.coeff((0, 1)));
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        let inv = det.inv();
        Self::linear(d * inv.clone(), -b * inv.clone(), -c * inv.clone(), a * inv).ok()
    }
}

/// `f(x_image, y_image)`.
pub fn apply_substitution<F: Field>(f: &BiPoly<F>, phi: &Automorphism<F>) -> BiPoly<F> {
    phi.apply(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::quad::{ExtElem, QuadExt};
    use crate::arith::rational::{rat, ratio, Rational};

    fn q(ts: &[((u32, u32), i64)]) -> BiPoly<Rational> {
        BiPoly::from_int_terms(ts)
    }

    #[test]
    fn binomial_expansion() {
        let phi = Automorphism::linear(rat(1), rat(1), rat(0), rat(1)).unwrap();
        assert_eq!(phi.apply(&q(&[((2, 0), 1)])), q(&[((2, 0), 1), ((1, 1), 2), ((0, 2), 1)]));
    }

    #[test]
    fn cubic_shift() {
        let f = q(&[((3, 0), 1), ((2, 3), 1), ((0, 8), 1)]);
        let phi = Automorphism::shift_x(BiPoly::monomial(ratio(-1, 3), (0, 3))).unwrap();
        let expected = BiPoly::from_terms([
            ((3, 0), rat(1)),
            ((0, 8), rat(1)),
            ((1, 6), ratio(-1, 3)),
            ((0, 9), ratio(2, 27)),
        ]);
        assert_eq!(phi.apply(&f), expected);
    }

    #[test]
    fn over_gaussian_field() {
        let k = QuadExt::new(rat(0), rat(1)).unwrap();
        let f: BiPoly<ExtElem> = q(&[((2, 0), 1), ((0, 2), 1)]).map(|c| ExtElem::rational(c.clone()));
        let phi = Automorphism::new(BiPoly::x(), BiPoly::monomial(k.gen(), (0, 1))).unwrap();
        let g = phi.apply(&f);
        assert_eq!(g.coeff((2, 0)), ExtElem::rational(rat(1)));
        assert_eq!(g.coeff((0, 2)), ExtElem::rational(rat(-1)));
        assert_eq!(g.len(), 2);
    }

    #[test]
    fn rejects_constant_term() {
        let xi = &BiPoly::<Rational>::x() + &BiPoly::one();
        assert!(Automorphism::new(xi, BiPoly::y()).is_err());
        assert!(Automorphism::linear(rat(1), rat(2), rat(2), rat(4)).is_err());
    }
}
