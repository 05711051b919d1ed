//! Exact real normal forms for unimodal plane curve singularities of corank 2.

pub mod arith;
pub mod classifier;
pub mod determinator;
pub mod local;
pub mod newton;
pub mod roots;
pub mod error;

pub use arith::{Automorphism, BiPoly, ExtElem, Field, QuadExt, Rational, UPoly};
pub use error::{Error, Result};
pub use classifier::{classify, NormalFormRecord};
pub use determinator::{detect_main_type, determine, Determination, SingularityType};
pub use newton::types::Family;
pub use roots::{AlgebraicNumber, Interval};
