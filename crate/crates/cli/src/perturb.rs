//! Random right-equivalent copies of normal form equations.
//!
//! All randomness comes from a SplitMix64 stream seeded with the given seed,
//! so every germ is reproducible from `(type, parameter, seed)`.

use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;
use realnf_core::newton::types::type_data;
use realnf_core::{Automorphism, BiPoly, Error, Rational, Result, SingularityType};

#[derive(Clone, Debug, PartialEq)]
pub struct Perturbed {
    /// The normal form equation before the coordinate change.
    pub source: BiPoly<Rational>,
    /// `x -> m00 x + m01 y`, `y -> m10 x + m11 y`, determinant `+-1`.
    pub matrix: [[i64; 2]; 2],
    /// Added terms, all of standard degree above `mu + 1`.
    pub tail: BiPoly<Rational>,
    pub germ: BiPoly<Rational>,
}

/// A unimodular integer matrix with entries in `[-3, 3]`.
pub fn unimodular(rng: &mut SplitMix64) -> [[i64; 2]; 2] {
    loop {
        let m: [[i64; 2]; 2] = [[rng.gen_range(-3..=3), rng.gen_range(-3..=3)], [rng.gen_range(-3..=3), rng.gen_range(-3..=3)]];
        if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1 {
            return m;
        }
    }
}

/// One to three monomials of degree `mu + 2` or `mu + 3` with nonzero
/// integer coefficients in `[-3, 3]`.
pub fn tail(rng: &mut SplitMix64, mu: u32) -> BiPoly<Rational> {
    let mut g = BiPoly::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let d = rng.gen_range(mu + 2..=mu + 3);
        let i = rng.gen_range(0..=d);
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if c != 0 {
                break c;
            }
        };
        g.add_term((i, d - i), Rational::from_integer(c.into()));
    }
    g
}

pub fn perturb(ty: &SingularityType, a: &Rational, seed: u64) -> Result<Perturbed> {
    let td = type_data(ty.family)?;
    if !td.admissible(&ty.signs, a) {
        return Err(Error::DegenerateInput(format!("parameter {a} is not admissible for {ty}")));
    }
    let source = td.normal_form(&ty.signs, a);
    let mut rng = SplitMix64::seed_from_u64(seed);
    let m = unimodular(&mut rng);
    let q = |v: i64| Rational::from_integer(v.into());
    let phi = Automorphism::linear(q(m[0][0]), q(m[0][1]), q(m[1][0]), q(m[1][1]))?;
    let tail = tail(&mut rng, td.milnor);
    let germ = &phi.apply(&source) + &tail;
    Ok(Perturbed { source, matrix: m, tail, germ })
}

#[cfg(test)]
mod tests {
    use super::*;
    use realnf_core::arith::rational::rat;

    #[test]
    fn reproducible() {
        let ty: SingularityType = "E14+".parse().unwrap();
        let a = perturb(&ty, &rat(2), 7).unwrap();
        assert_eq!(a, perturb(&ty, &rat(2), 7).unwrap());
        assert!(a.tail.order().unwrap() >= 16);
        let det = a.matrix[0][0] * a.matrix[1][1] - a.matrix[0][1] * a.matrix[1][0];
        assert_eq!(det.abs(), 1);
    }

    #[test]
    fn restriction() {
        let ty: SingularityType = "X9++".parse().unwrap();
        assert!(perturb(&ty, &rat(2), 1).is_err());
        assert!(perturb(&ty, &rat(-2), 1).is_err());
        assert!(perturb(&ty, &rat(1), 1).is_ok());
    }
}
