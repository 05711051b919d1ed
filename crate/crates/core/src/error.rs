use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("reducible quadratic modulus {0}")]
    Reducible(String),
    #[error("not divisible: {0}")]
    NotDivisible(String),
    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),
    #[error("no root in interval")]
    NoRootInInterval,
    #[error("more than one root in interval")]
    MultipleRootsInInterval,
    #[error("nonzero constant or linear part")]
    NotSingular,
    #[error("singularity is not isolated")]
    NotIsolated,
    #[error("corank {0} is not 2")]
    NotCorank2(u32),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("inconsistent reduction: {0}")]
    Inconsistent(String),
    #[error("internal: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
