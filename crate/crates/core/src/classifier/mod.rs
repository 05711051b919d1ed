//! Real normal forms: all normal form equations right equivalent to a germ,
//! each with its parameter as an exact algebraic number.

pub mod exceptional;
pub mod hyperbolic;
pub mod j10;
pub mod state;
pub mod x9;
pub mod y;

use std::cmp::Ordering;
use std::fmt;

use crate::arith::bipoly::BiPoly;
use crate::arith::rational::Rational;
use crate::arith::upoly::UPoly;
use crate::determinator::{determine, SingularityType};
use crate::error::{Error, Result};
use crate::newton::types::{type_data, Family};
use crate::roots::algebraic::{minpoly_in_interval, AlgebraicNumber};
use crate::roots::interval::Interval;

pub use exceptional::scaling_minpoly;
pub use state::PipelineState;

/// One normal form equation `NF(T)(a)` equivalent to the input.
#[derive(Clone, Debug, PartialEq)]
pub struct NormalFormRecord {
    pub ty: SingularityType,
    /// Normal form with the literal `a` for the parameter.
    pub normal_form: String,
    pub parameter: AlgebraicNumber,
}

impl NormalFormRecord {
    /// The record for `family^signs` with parameter `m_I(p)`.
    pub fn new(family: Family, signs: Vec<i8>, p: &UPoly<Rational>, i: Interval) -> Result<Self> {
        let td = type_data(family)?;
        let parameter = minpoly_in_interval(p, &i)?;
        if let Some(a) = parameter.as_rational() {
            if !td.admissible(&signs, &a) {
                return Err(Error::DegenerateInput(format!("parameter {a} violates the restriction of {}", family.label(&signs))));
            }
        }
        Ok(NormalFormRecord { normal_form: td.normal_form_string(&signs), ty: SingularityType::new(family, signs), parameter })
    }

    /// The normal form equation for a rational parameter.
    pub fn equation(&self) -> Option<BiPoly<Rational>> {
        let a = self.parameter.as_rational()?;
        Some(type_data(self.ty.family).ok()?.normal_form(&self.ty.signs, &a))
    }
}

impl fmt::Display for NormalFormRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}, a = {}", self.ty, self.normal_form, self.parameter)
    }
}

fn lower_cmp(a: &Interval, b: &Interval) -> Ordering {
    match (&a.lower, &b.lower) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp(y).then(b.lower_closed.cmp(&a.lower_closed)),
    }
}

/// Deterministic output order: family, signs, then interval lower bound.
pub fn sort_records(rs: &mut [NormalFormRecord]) {
    rs.sort_by(|a, b| {
        a.ty.cmp(&b.ty)
            .then_with(|| lower_cmp(&a.parameter.interval, &b.parameter.interval))
            .then_with(|| a.parameter.minpoly.to_string().cmp(&b.parameter.minpoly.to_string()))
    });
}

/// All normal form equations right equivalent to `f`.
pub fn classify(f: &BiPoly<Rational>) -> Result<Vec<NormalFormRecord>> {
    let det = determine(f)?;
    let bound = det.mu + 2;
    let g = f.jet(bound);
    let mut out = match det.family {
        Family::E12
        | Family::E13
        | Family::E14
        | Family::Z11
        | Family::Z12
        | Family::Z13
        | Family::W12
        | Family::W13 => exceptional::classify_exceptional(&g, det.family, bound)?,
        Family::J10 => j10::classify_j10(&g)?,
        Family::X9 => x9::classify_x9(&g)?,
        Family::X9k(k) => hyperbolic::classify_x9k(&g, k, bound)?,
        Family::J10k(k) => hyperbolic::classify_j10k(&g, k, bound)?,
        Family::Y(..) | Family::Ytilde(_) => y::classify_y(&g, bound)?,
    };
    sort_records(&mut out);
    Ok(out)
}
