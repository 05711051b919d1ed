//! The one-face exceptional families E12..E14, Z11..Z13, W12, W13.

use num::{Signed, Zero};

use super::state::{eliminate_term, flip, normalize_low_jet_exceptional, principal_part};
use super::NormalFormRecord;
use crate::arith::auto::Automorphism;
use crate::arith::bipoly::{BiPoly, Mono};
use crate::arith::rational::{lcm_denominators, pow_i, rat, sign, Rational};
use crate::arith::upoly::UPoly;
use crate::error::{Error, Result};
use crate::local::jacobian::reduce_mod_jacobian_graded;
use crate::newton::types::{polygon_position, type_data, Family, Position, Slot, TypeData};
use crate::newton::weight::weighted_degree;
use crate::roots::interval::Interval;

/// Minimal polynomial `z^N - a^N` of the parameter reached from
/// `c1 m1 + c2 m2 + t m` by scaling `x` and `y` so that `|c1| = |c2| = 1`.
pub fn scaling_minpoly(nonmoduli: [(Mono, Rational); 2], moduli: (Mono, Rational)) -> Result<UPoly<Rational>> {
    let [((i1, j1), c1), ((i2, j2), c2)] = nonmoduli;
    let ((p, q), t) = moduli;
    let (i1, j1, i2, j2, p, q) = (i1 as i64, j1 as i64, i2 as i64, j2 as i64, p as i64, q as i64);
    let d = i1 * j2 - i2 * j1;
    if d == 0 || c1.is_zero() || c2.is_zero() {
        return Err(Error::DegenerateInput("dependent monomials in the scaling".into()));
    }
    let e1 = Rational::new((q * i2 - p * j2).into(), d.into());
    let e2 = Rational::new((p * j1 - q * i1).into(), d.into());
    let n = lcm_denominators([&e1, &e2]);
    let n_i: i64 = n.try_into().map_err(|_| Error::Internal("scaling exponent overflow".into()))?;
    let exp = |e: &Rational| -> i64 { (e * Rational::from_integer(n_i.into())).to_integer().try_into().unwrap() };
    let an = pow_i(&t, n_i) * pow_i(&c1.abs(), exp(&e1)) * pow_i(&c2.abs(), exp(&e2));
    Ok(UPoly::from_terms([(n_i as u32, rat(1)), (0, -an)]))
}

fn below_terms(f: &BiPoly<Rational>, td: &TypeData, j: u32) -> Option<Mono> {
    f.support().into_iter().find(|m| m.0 + m.1 == j && polygon_position(td, *m) == Position::Below)
}

/// Remove the terms strictly below the polygon, degree by degree.
fn eliminate_below(f: BiPoly<Rational>, td: &TypeData, bound: u32) -> Result<BiPoly<Rational>> {
    let keep = move |m: Mono| m.0 + m.1 <= bound;
    let mut g = f.filter(keep);
    for j in td.low_jet_degree + 1..=bound {
        let mut guard = 0;
        while let Some(t) = below_terms(&g, td, j) {
            guard += 1;
            if guard > 64 {
                return Err(Error::Internal(format!("no progress eliminating degree {j}")));
            }
            let f0 = principal_part(&g, td);
            g = eliminate_term(&g, &f0, t, None, &keep)?;
        }
    }
    Ok(g)
}

/// Reduce the graded pieces between the polygon and the moduli degree modulo
/// the Jacobian ideal of the principal part.
fn eliminate_above(f: BiPoly<Rational>, td: &TypeData) -> Result<BiPoly<Rational>> {
    let w = &td.weight;
    let top = td.moduli_degree;
    let keep = |m: Mono| weighted_degree(w, m) <= top;
    let mut g = f.filter(keep);
    let f0 = principal_part(&g, td);
    for j in td.degree + 1..=top {
        let red = reduce_mod_jacobian_graded(&g, &f0, w, j, &[td.moduli])?;
        if red.v1.is_zero() && red.v2.is_zero() {
            continue;
        }
        let phi = Automorphism::new(&BiPoly::x() - &red.v1, &BiPoly::y() - &red.v2)?;
        g = phi.apply_truncated(&g, &keep);
    }
    Ok(g)
}

/// Flips making every `One` slot positive.
fn positive_flips(f: &BiPoly<Rational>, td: &TypeData) -> Result<(i8, i8)> {
    [(1, 1), (-1, 1), (1, -1), (-1, -1)]
        .into_iter()
        .find(|&(e1, e2)| {
            let g = flip(f, e1, e2);
            td.template.iter().all(|(m, s)| *s != Slot::One || g.coeff(*m).is_positive())
        })
        .ok_or_else(|| Error::Inconsistent("no sign flip normalizes the leading terms".into()))
}

pub fn classify_exceptional(g: &BiPoly<Rational>, family: Family, bound: u32) -> Result<Vec<NormalFormRecord>> {
    let td = type_data(family)?;
    let state = normalize_low_jet_exceptional(g, &td)?;
    let f = eliminate_below(state.current, &td, bound)?;
    let on = principal_part(&f, &td);
    if let Some(m) = on.support().into_iter().find(|m| !td.support.contains(m)) {
        return Err(Error::Inconsistent(format!("unexpected term {} on the polygon", crate::arith::bipoly::fmt_mono(m))));
    }
    let f = eliminate_above(f, &td)?;
    let (e1, e2) = positive_flips(&f, &td)?;
    let f = flip(&f, e1, e2);
    let mut signs = vec![0i8; td.sign_arity];
    let mut nonmoduli = vec![];
    for (m, slot) in &td.template {
        let c = f.coeff(*m);
        match slot {
            Slot::Sign(i) => signs[*i] = sign(&c) as i8,
            Slot::Param => continue,
            _ => {}
        }
        if c.is_zero() {
            return Err(Error::DegenerateInput(format!("missing {}", crate::arith::bipoly::fmt_mono(*m))));
        }
        nonmoduli.push((*m, c));
    }
    let t = f.coeff(td.moduli);
    let [a, b]: [(Mono, Rational); 2] =
        nonmoduli.try_into().map_err(|_| Error::Internal("exceptional template without two leading terms".into()))?;
    let p = scaling_minpoly([a, b], (td.moduli, t.clone()))?;
    let i = if t.is_positive() { Interval::positive() } else { Interval::non_positive() };
    Ok(vec![NormalFormRecord::new(family, signs, &p, i)?])
}
