//! Bivariate gcd over Q by primitive pseudo-remainder sequences in Q[y][x].

use num::Zero;

use crate::arith::bipoly::BiPoly;
use crate::arith::rational::Rational;
use crate::arith::upoly::UPoly;

type C = UPoly<Rational>;

fn to_rec(f: &BiPoly<Rational>) -> Vec<C> {
    let dx = f.terms().map(|((i, _), _)| i).max().map_or(0, |d| d as usize + 1);
    let mut v = vec![C::zero(); dx];
    for ((i, j), c) in f.terms() {
        v[i as usize].add_term(j, c.clone());
    }
    v
}

fn from_rec(v: &[C]) -> BiPoly<Rational> {
    let mut f = BiPoly::zero();
    for (i, c) in v.iter().enumerate() {
        for (j, a) in c.terms() {
            f.add_term((i as u32, j), a.clone());
        }
    }
    f
}

fn trim(mut v: Vec<C>) -> Vec<C> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn content(v: &[C]) -> C {
    v.iter().fold(C::zero(), |g, c| g.gcd(c))
}

fn primitive(v: &[C]) -> Vec<C> {
    let c = content(v);
    v.iter().map(|a| a.exact_div(&c)).collect()
}

fn prem(a: &[C], b: &[C]) -> Vec<C> {
    let mut r = a.to_vec();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - b.len();
        let mut next: Vec<C> = r.iter().map(|c| c * &lb).collect();
        for (k, bc) in b.iter().enumerate() {
            next[k + shift] = &next[k + shift] - &(&lr * bc);
        }
        r = trim(next);
    }
    r
}

/// Greatest common divisor up to a rational constant.
pub fn gcd(f: &BiPoly<Rational>, g: &BiPoly<Rational>) -> BiPoly<Rational> {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    let (a, b) = (trim(to_rec(f)), trim(to_rec(g)));
    let c = content(&a).gcd(&content(&b));
    let mut a = primitive(&a);
    let mut b = primitive(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        if b.len() == 1 {
            a = vec![C::one()];
            break;
        }
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r) };
    }
    let a: Vec<C> = primitive(&a).iter().map(|x| x * &c).collect();
    from_rec(&a)
}

const PRIMES: [u64; 2] = [1_000_000_007, 998_244_353];
const POINTS: [u64; 3] = [3, 7, 12345];

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

fn reduce(q: &Rational, p: u64) -> Option<u64> {
    let m = num::BigInt::from(p);
    let red = |n: &num::BigInt| -> u64 { ((n % &m + &m) % &m).try_into().unwrap() };
    let d = red(q.denom());
    (d != 0).then(|| mulm(red(q.numer()), powm(d, p - 2, p), p))
}

/// `f(x, y0)` mod `p`, low degree first, or `None` if the leading
/// coefficient in `x` vanishes there.
fn specialize(f: &BiPoly<Rational>, y0: u64, p: u64) -> Option<Vec<u64>> {
    let dx = f.terms().map(|((i, _), _)| i).max()? as usize;
    let mut v = vec![0u64; dx + 1];
    for ((i, j), c) in f.terms() {
        let t = mulm(reduce(c, p)?, powm(y0, j as u64, p), p);
        v[i as usize] = (v[i as usize] + t) % p;
    }
    (v[dx] != 0).then_some(v)
}

fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    let trim = |v: &mut Vec<u64>| {
        while v.last() == Some(&0) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        while a.len() >= b.len() {
            let q = mulm(*a.last().unwrap(), powm(*b.last().unwrap(), p - 2, p), p);
            let s = a.len() - b.len();
            for (k, bk) in b.iter().enumerate() {
                a[s + k] = (a[s + k] + p - mulm(q, *bk, p)) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// True if some good specialization shows that `gcd(f, g)` has degree 0 in `x`.
fn x_free_gcd(f: &BiPoly<Rational>, g: &BiPoly<Rational>) -> bool {
    PRIMES.iter().any(|&p| {
        POINTS.iter().any(|&y0| match (specialize(f, y0, p), specialize(g, y0, p)) {
            (Some(a), Some(b)) => gcd_degree_mod(a, b, p) == 0,
            _ => false,
        })
    })
}

/// Modular certificate that `f` and `g` are coprime. A `false` answer is
/// inconclusive.
pub fn certainly_coprime(f: &BiPoly<Rational>, g: &BiPoly<Rational>) -> bool {
    x_free_gcd(f, g) && x_free_gcd(&f.swap_xy(), &g.swap_xy())
}

/// Whether `f` and `g` share a nonconstant factor vanishing at the origin.
pub fn common_factor_through_origin(f: &BiPoly<Rational>, g: &BiPoly<Rational>) -> bool {
    if certainly_coprime(f, g) {
        return false;
    }
    let h = gcd(f, g);
    h.total_degree().unwrap_or(0) > 0 && h.coeff((0, 0)).is_zero()
}
