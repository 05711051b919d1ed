use num::{BigInt, Integer, One, Signed, ToPrimitive, Zero};

use super::modp;
use crate::arith::rational::Rational;
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};

/// `p = constant * prod(f_i^m_i)` with monic irreducible, pairwise distinct `f_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct Factorization {
    pub constant: Rational,
    pub factors: Vec<(UPoly<Rational>, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly<Rational> {
        let mut r = UPoly::constant(self.constant.clone());
        for (f, m) in &self.factors {
            r = &r * &f.pow(*m);
        }
        r
    }
}

/// Yun's squarefree decomposition of a nonzero polynomial (monic parts).
pub fn squarefree_decomposition(p: &UPoly<Rational>) -> Vec<(UPoly<Rational>, u32)> {
    let a = p.monic();
    let mut out = vec![];
    if a.degree().unwrap_or(0) == 0 {
        return out;
    }
    let b = a.derivative();
    let c = a.gcd(&b);
    let mut w = a.exact_div(&c);
    let mut y = b.exact_div(&c);
    let mut z = &y - &w.derivative();
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let g = w.gcd(&z);
        if g.degree().unwrap_or(0) > 0 {
            out.push((g.clone(), i));
        }
        w = w.exact_div(&g);
        y = z.exact_div(&g);
        z = &y - &w.derivative();
        i += 1;
    }
    out
}

pub fn factor_rational(p: &UPoly<Rational>) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut factors = vec![];
    for (part, m) in squarefree_decomposition(p) {
        for g in factor_squarefree_integer(&part.primitive_integer()) {
            factors.push((UPoly::from_bigints(&g).monic(), m));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), a.1, a.0.to_string()).cmp(&(b.0.degree(), b.1, b.0.to_string()))
    });
    Ok(Factorization { constant: p.lc(), factors })
}

type ZPoly = Vec<BigInt>;

fn zmul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    r
}

fn reduce(a: &ZPoly, m: &BigInt) -> ZPoly {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn to_modp(a: &ZPoly, p: u64) -> modp::Poly {
    let pb = BigInt::from(p);
    modp::trim(a.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect())
}

fn from_modp(a: &modp::Poly) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}

const PRIMES: [u64; 24] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

/// Irreducible factors over Z of a primitive squarefree polynomial.
fn factor_squarefree_integer(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f[n].clone();
    let mut best: Option<(u64, Vec<modp::Poly>)> = None;
    let mut tried = 0;
    for &p in PRIMES.iter() {
        let fp = to_modp(f, p);
        if modp::deg(&fp) != n as i64 {
            continue;
        }
        if modp::deg(&modp::gcd(&fp, &modp::derivative(&fp, p), p)) != 0 {
            continue;
        }
        let fs = modp::factor_squarefree(&modp::monic(&fp, p), p);
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((p, fs));
        }
        tried += 1;
        if tried == 4 {
            break;
        }
    }
    let (p, fs) = best.expect("no suitable prime");
    if fs.len() == 1 {
        return vec![f.clone()];
    }
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (BigInt::one() << n) * (norm2.sqrt() + 1u32);
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut m = pb.clone();
    while m <= &bound * 2 {
        m *= &pb;
        k += 1;
    }
    let target = reduce(&f.iter().map(|c| c * mod_inverse(&lc, &m)).collect(), &m);
    let lifted = hensel_lift_all(&target, &fs, p, k);
    recombine(f.clone(), lifted, &m)
}

/// Lift a monic factorization of `target` mod p to mod p^k.
fn hensel_lift_all(target: &ZPoly, fs: &[modp::Poly], p: u64, k: u32) -> Vec<ZPoly> {
    if fs.len() == 1 {
        return vec![target.clone()];
    }
    let (left, right) = fs.split_at(fs.len() / 2);
    let prod = |v: &[modp::Poly]| v.iter().fold(vec![1u64], |acc, g| modp::mul(&acc, g, p));
    let (a, b) = hensel_lift_pair(target, &prod(left), &prod(right), p, k);
    let mut out = hensel_lift_all(&a, left, p, k);
    out.extend(hensel_lift_all(&b, right, p, k));
    out
}

fn hensel_lift_pair(f: &ZPoly, a0: &modp::Poly, b0: &modp::Poly, p: u64, k: u32) -> (ZPoly, ZPoly) {
    let (_, _, t) = modp::ext_gcd(a0, b0, p);
    let pb = BigInt::from(p);
    let mut a = from_modp(a0);
    let mut b = from_modp(b0);
    let mut pj = pb.clone();
    for _ in 1..k {
        let next = &pj * &pb;
        let ab = zmul(&a, &b);
        let diff: ZPoly = (0..f.len())
            .map(|i| (&f[i] - ab.get(i).cloned().unwrap_or_default()).mod_floor(&next) / &pj)
            .collect();
        let e = to_modp(&diff, p);
        let da = modp::rem(&modp::mul(&t, &e, p), a0, p);
        let db = modp::div_rem(&modp::sub(&e, &modp::mul(&da, b0, p), p), a0, p).0;
        for (i, c) in da.iter().enumerate() {
            a[i] += &pj * BigInt::from(*c);
        }
        for (i, c) in db.iter().enumerate() {
            b[i] += &pj * BigInt::from(*c);
        }
        pj = next;
    }
    (reduce(&a, &pj), reduce(&b, &pj))
}

fn zpoly_to_q(a: &ZPoly) -> UPoly<Rational> {
    UPoly::from_bigints(a)
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, m: &BigInt) -> Vec<ZPoly> {
    let mut out = vec![];
    let mut s = 1;
    while 2 * s <= lifted.len() {
        let mut found = None;
        for subset in combinations(lifted.len(), s) {
            let lc = f.last().unwrap().clone();
            let mut g = vec![lc];
            for &i in &subset {
                g = reduce(&zmul(&g, &lifted[i]), m);
            }
            let g: ZPoly = g.iter().map(|c| symmetric(c, m)).collect();
            let gq = zpoly_to_q(&g).primitive();
            let (q, r) = zpoly_to_q(&f).div_rem(&gq);
            if r.is_zero() && q.terms().all(|(_, c)| c.is_integer()) {
                found = Some((subset, gq, q));
                break;
            }
        }
        match found {
            Some((subset, g, q)) => {
                out.push(g.primitive_integer());
                f = q.terms().fold(vec![BigInt::zero(); q.deg() as usize + 1], |mut v, (e, c)| {
                    v[e as usize] = c.to_integer();
                    v
                });
                lifted = lifted.into_iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, g)| g).collect();
            }
            None => s += 1,
        }
    }
    if f.len() > 1 {
        out.push(zpoly_to_q(&f).primitive_integer());
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let mut i = k;
        while i > 0 && idx[i - 1] == n - k + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio};

    fn z(cs: &[i64]) -> UPoly<Rational> {
        UPoly::from_ints(cs)
    }

    #[test]
    fn z12_minus_4096() {
        let mut cs = vec![0i64; 13];
        cs[0] = -4096;
        cs[12] = 1;
        let f = factor_rational(&z(&cs)).unwrap();
        let got: Vec<String> = f.factors.iter().map(|(g, _)| g.to_string()).collect();
        let mut want = vec!["z-2", "z+2", "z^2+4", "z^2+2*z+4", "z^2-2*z+4", "z^4-4*z^2+16"];
        want.sort();
        let mut got_sorted = got.clone();
        got_sorted.sort();
        assert_eq!(got_sorted, want);
        assert!(f.factors.iter().all(|(_, m)| *m == 1));
        assert_eq!(f.expand(), z(&cs));
    }

    #[test]
    fn repeated_and_biquadratic() {
        let f = factor_rational(&z(&[0, 0, 1])).unwrap();
        assert_eq!(f.factors, vec![(z(&[0, 1]), 2)]);
        let f = factor_rational(&z(&[11664, 0, -8136, 0, 25])).unwrap();
        // Both quadratic pieces split: the roots are 18, -18, 6/5 and -6/5.
        let got: Vec<UPoly<Rational>> = f.factors.iter().map(|(g, _)| g.clone()).collect();
        assert_eq!(got.len(), 4);
        for r in [rat(18), rat(-18), ratio(6, 5), ratio(-6, 5)] {
            assert!(got.contains(&UPoly::from_coeffs(vec![-r, rat(1)])));
        }
        assert_eq!(f.constant, rat(25));
    }

    #[test]
    fn swinnerton_dyer_like() {
        // z^4 - 10 z^2 + 1 is irreducible but splits modulo every prime.
        let f = factor_rational(&z(&[1, 0, -10, 0, 1])).unwrap();
        assert_eq!(f.factors.len(), 1);
    }
}
