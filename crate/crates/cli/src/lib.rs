//! Front end for `realnf`: expression parsing, report rendering and the
//! perturbation harness used by the round-trip tests.

pub mod parse;
pub mod perturb;
pub mod report;

pub use parse::{parse_polynomial, render, ParseError, ParsedInput};
pub use perturb::{perturb, Perturbed};
pub use report::{OutputReport, RecordJson, Status};
