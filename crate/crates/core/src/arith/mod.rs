//! Exact arithmetic: rationals, quadratic fields, sparse polynomials and
//! coordinate changes.

pub mod auto;
pub mod bipoly;
pub mod field;
pub mod quad;
pub mod rational;
pub mod upoly;

pub use auto::{apply_substitution, Automorphism};
pub use bipoly::{fmt_mono, BiPoly, Mono};
pub use field::Field;
pub use quad::{DiscriminantSign, ExtElem, QuadExt};
pub use rational::{rat, ratio, sign, Rational};
pub use upoly::UPoly;
