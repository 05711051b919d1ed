//! Benchmark fixtures shared by the criterion targets.

use realnf_core::{BiPoly, Rational};

/// `(name, germ)` pairs covering each classifier branch.
pub const FIXTURES: &[(&str, &[((u32, u32), i64)])] = &[
    ("E14", &[((3, 0), 1), ((0, 8), 1), ((1, 6), 2)]),
    ("X9", &[((4, 0), 1), ((2, 2), 3), ((0, 4), 1)]),
    ("J10", &[((3, 0), 1), ((1, 4), -1)]),
    ("X12", &[((4, 0), 1), ((2, 2), 1), ((0, 7), 1)]),
    ("Y5,5", &[((2, 2), 1), ((5, 0), 1), ((0, 5), 1)]),
    ("Ytilde5", &[((4, 0), 1), ((2, 2), 2), ((0, 4), 1), ((5, 0), 1)]),
];

pub fn germ(terms: &[((u32, u32), i64)]) -> BiPoly<Rational> {
    BiPoly::from_terms(terms.iter().map(|&(m, c)| (m, Rational::from_integer(c.into()))))
}
