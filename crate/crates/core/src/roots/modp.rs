//! Dense polynomials over a small prime field.

use num::BigUint;

pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn deg(a: &Poly) -> i64 {
    a.len() as i64 - 1
}

pub fn inv(a: u64, p: u64) -> u64 {
    pow(a, p - 2, p)
}

pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

pub fn add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(r)
}

pub fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let r = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(r)
}

pub fn mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut r = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] = (r[i + j] + x * y) % p;
        }
    }
    trim(r)
}

pub fn scale(a: &Poly, c: u64, p: u64) -> Poly {
    trim(a.iter().map(|x| x * c % p).collect())
}

pub fn div_rem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    assert!(!b.is_empty());
    let mut r = a.clone();
    let db = b.len() - 1;
    let li = inv(*b.last().unwrap(), p);
    if r.len() < b.len() {
        return (vec![], trim(r));
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db] * li % p;
        q[k] = c;
        if c != 0 {
            for (j, y) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + p - c * y % p) % p;
            }
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    div_rem(a, b, p).1
}

pub fn monic(a: &Poly, p: u64) -> Poly {
    match a.last() {
        None => vec![],
        Some(&l) => scale(a, inv(l, p), p),
    }
}

pub fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Returns `(g, s, t)` with `s a + t b = g` monic.
pub fn ext_gcd(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly, Poly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (Poly, Poly) = (vec![1], vec![]);
    let (mut t0, mut t1): (Poly, Poly) = (vec![], vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
        t0 = t1;
        t1 = t;
    }
    let li = inv(*r0.last().unwrap(), p);
    (scale(&r0, li, p), scale(&s0, li, p), scale(&t0, li, p))
}

pub fn derivative(a: &Poly, p: u64) -> Poly {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| (i as u64 % p) * c % p).collect())
}

pub fn powmod(base: &Poly, e: &BigUint, m: &Poly, p: u64) -> Poly {
    let mut r: Poly = rem(&vec![1], m, p);
    let b = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        r = rem(&mul(&r, &r, p), m, p);
        if e.bit(i) {
            r = rem(&mul(&r, &b, p), m, p);
        }
    }
    r
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let mut out = vec![];
    let mut f = f.clone();
    let x: Poly = vec![0, 1];
    let mut h = x.clone();
    let mut d = 0;
    while deg(&f) >= 2 * (d as i64 + 1) {
        d += 1;
        h = powmod(&h, &BigUint::from(p), &f, p);
        let g = gcd(&sub(&h, &x, p), &f, p);
        if deg(&g) > 0 {
            out.push((g.clone(), d));
            f = div_rem(&f, &g, p).0;
            h = rem(&h, &f, p);
        }
    }
    if deg(&f) > 0 {
        let d = deg(&f) as usize;
        out.push((f, d));
    }
    out
}

/// Equal-degree splitting (odd p) driven by a deterministic generator.
fn edf(f: &Poly, d: usize, p: u64, state: &mut u64) -> Vec<Poly> {
    let n = deg(f) as usize;
    if n == d {
        return vec![f.clone()];
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Poly = trim((0..n).map(|_| next(state) % p).collect());
        if deg(&a) < 1 {
            continue;
        }
        let b = sub(&powmod(&a, &e, f, p), &vec![1], p);
        let g = gcd(&b, f, p);
        if deg(&g) > 0 && deg(&g) < n as i64 {
            let h = div_rem(f, &g, p).0;
            let mut r = edf(&g, d, p, state);
            r.extend(edf(&monic(&h, p), d, p, state));
            return r;
        }
    }
}

fn next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Monic irreducible factors of a monic squarefree polynomial over F_p, p odd.
pub fn factor_squarefree(f: &Poly, p: u64) -> Vec<Poly> {
    let mut state = 0x5EED ^ p;
    let mut out = vec![];
    for (g, d) in ddf(f, p) {
        out.extend(edf(&g, d, p, &mut state));
    }
    out
}
