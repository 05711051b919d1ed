//! Real roots: Sturm counting, isolation, factorization over Q and
//! algebraic numbers given by a minimal polynomial and an isolating interval.

pub mod algebraic;
pub mod factor;
pub mod interval;
pub mod modp;
pub mod sturm;

pub use algebraic::{minpoly_in_interval, AlgebraicNumber};
pub use factor::{factor_rational, squarefree_decomposition, Factorization};
pub use interval::Interval;
pub use sturm::{isolate_real_roots, real_roots_with_multiplicity, sturm_count, SturmChain};
