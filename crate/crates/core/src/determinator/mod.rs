//! Complex main type of a corank-2 germ, with the real split of `Y_{r,r}`.
//!
//! The decision uses the factorization pattern of the 3-jet and 4-jet and
//! the Milnor number. Simple germs are reported as out of scope by name.

pub mod forms;

use std::fmt;
use std::str::FromStr;

use crate::arith::bipoly::BiPoly;
use crate::arith::rational::{sign, Rational};
use crate::classifier::state::normalize_low_jet_exceptional;
use crate::classifier::y::step_two;
use crate::error::{Error, Result};
use crate::local::{corank, milnor_number, Milnor};
use crate::newton::types::{type_data, Family};
use crate::newton::weight::{weighted_part, Weight};
use crate::roots::factor::squarefree_decomposition;
use forms::{pattern, real_factor_count};

/// A real type: main family plus the subtype signs (empty before Step IV).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingularityType {
    pub family: Family,
    pub signs: Vec<i8>,
}

impl SingularityType {
    pub fn new(family: Family, signs: Vec<i8>) -> Self {
        SingularityType { family, signs }
    }

    pub fn label(&self) -> String {
        self.family.label(&self.signs)
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Parses labels such as `E14+`, `X9+-`, `X12++`, `Y5,6+-` or `Ytilde5+`.
impl FromStr for SingularityType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::OutOfScope(format!("unknown type label {s:?}"));
        let base = s.trim_end_matches(['+', '-']);
        let signs: Vec<i8> = s[base.len()..].chars().map(|c| if c == '+' { 1 } else { -1 }).collect();
        let num = |t: &str| t.parse::<u32>().map_err(|_| bad());
        let family = if let Some(r) = base.strip_prefix("Ytilde") {
            Family::Ytilde(num(r)?)
        } else if let Some(rs) = base.strip_prefix('Y') {
            let (r, s) = rs.split_once(',').ok_or_else(bad)?;
            Family::Y(num(r)?, num(s)?)
        } else {
            match base {
                "E12" => Family::E12,
                "E13" => Family::E13,
                "E14" => Family::E14,
                "Z11" => Family::Z11,
                "Z12" => Family::Z12,
                "Z13" => Family::Z13,
                "W12" => Family::W12,
                "W13" => Family::W13,
                _ => match (base.get(..1), base.get(1..).map(num)) {
                    (Some("X"), Some(Ok(9))) => Family::X9,
                    (Some("X"), Some(Ok(n))) if n > 9 => Family::X9k(n - 9),
                    (Some("J"), Some(Ok(10))) => Family::J10,
                    (Some("J"), Some(Ok(n))) if n > 10 => Family::J10k(n - 10),
                    _ => return Err(bad()),
                },
            }
        };
        if type_data(family)?.sign_arity != signs.len() {
            return Err(bad());
        }
        Ok(SingularityType { family, signs })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Determination {
    pub family: Family,
    pub mu: u32,
    pub corank: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RealY {
    Yrs,
    Ytilde,
}

fn out(name: String) -> Error {
    Error::OutOfScope(name)
}

/// Real split of a complex `Y` germ by the real linear factors of its 4-jet.
pub fn split_real_y(f: &BiPoly<Rational>) -> Result<RealY> {
    let h = f.homogeneous_part(4);
    match real_factor_count(&h) {
        4 => Ok(RealY::Yrs),
        0 => Ok(RealY::Ytilde),
        n => Err(Error::Inconsistent(format!("4-jet of a Y germ with {n} real linear factors"))),
    }
}

/// Milnor number and corank, with simple and non-isolated germs rejected.
pub fn invariants(f: &BiPoly<Rational>) -> Result<(u32, u32)> {
    let c = corank(f)?;
    let mu = match milnor_number(f) {
        Milnor::Finite(m) => m,
        Milnor::Infinite => return Err(Error::NotIsolated),
    };
    match c {
        0 => Err(out("A1".into())),
        1 => Err(out(format!("A{mu}"))),
        _ => Ok((mu, c)),
    }
}

/// Main family of `f` (no signs).
pub fn detect_main_type(f: &BiPoly<Rational>) -> Result<Family> {
    determine(f).map(|d| d.family)
}

pub fn determine(f: &BiPoly<Rational>) -> Result<Determination> {
    let (mu, corank) = invariants(f)?;
    let g = f.jet(mu + 2);
    let family = family_of(&g, mu)?;
    type_data(family)?;
    Ok(Determination { family, mu, corank })
}

fn family_of(f: &BiPoly<Rational>, mu: u32) -> Result<Family> {
    let j3 = f.homogeneous_part(3);
    if !j3.is_zero() {
        return match pattern(&j3).as_slice() {
            [1, 1, 1] => Err(out("D4".into())),
            [2, 1] => Err(out(format!("D{mu}"))),
            [3] => cubic_branch(f, mu),
            p => Err(Error::Internal(format!("cubic pattern {p:?}"))),
        };
    }
    let j4 = f.homogeneous_part(4);
    if j4.is_zero() {
        return Err(out("corank 2 with zero 4-jet (modality >= 2)".into()));
    }
    match (pattern(&j4).as_slice(), mu) {
        ([1, 1, 1, 1], 9) => Ok(Family::X9),
        ([2, 1, 1], m) if m > 9 => Ok(Family::X9k(m - 9)),
        ([2, 2], _) => {
            let red = step_two(f, mu + 2)?;
            match split_real_y(f)? {
                RealY::Ytilde => Ok(Family::Ytilde(red.r)),
                RealY::Yrs => Ok(Family::Y(red.r.min(red.s), red.r.max(red.s))),
            }
        }
        ([3, 1], 11) => Ok(Family::Z11),
        ([3, 1], 12) => Ok(Family::Z12),
        ([3, 1], 13) => Ok(Family::Z13),
        ([4], 12) => Ok(Family::W12),
        ([4], 13) => Ok(Family::W13),
        (p, m) => Err(out(format!("4-jet pattern {p:?} with mu = {m} (modality >= 2)"))),
    }
}

/// `jet_3 = l^3`: E6, E7, E8, J10, J10+k or E12..E14, read from the
/// (2,1)-initial cubic after moving `l` to `x`.
fn cubic_branch(f: &BiPoly<Rational>, mu: u32) -> Result<Family> {
    match mu {
        6 | 7 | 8 => return Err(out(format!("E{mu}"))),
        9 => return Err(Error::Internal("mu = 9 with a cubed 3-jet".into())),
        _ => {}
    }
    let td = type_data(Family::J10)?;
    let g = normalize_low_jet_exceptional(f, &td)?.current;
    let w = Weight::single(2, 1);
    if [(0, 4), (0, 5), (1, 3)].iter().any(|m| !num::Zero::is_zero(&g.coeff(*m))) {
        return Err(Error::Internal("(2,1)-order below 6 with mu >= 10".into()));
    }
    let p = weighted_part(&g, &w, 6);
    let cubic = crate::arith::upoly::UPoly::from_coeffs(vec![p.coeff((0, 6)), p.coeff((1, 4)), p.coeff((2, 2)), p.coeff((3, 0))]);
    debug_assert!(sign(&cubic.lc()) != 0);
    let top = squarefree_decomposition(&cubic).iter().map(|(_, m)| *m).max().unwrap_or(1);
    match (top, mu) {
        (1, 10) => Ok(Family::J10),
        (2, m) if m > 10 => Ok(Family::J10k(m - 10)),
        (3, 12) => Ok(Family::E12),
        (3, 13) => Ok(Family::E13),
        (3, 14) => Ok(Family::E14),
        (t, m) => Err(out(format!("cubed 3-jet, root multiplicity {t}, mu = {m} (modality >= 2)"))),
    }
}
