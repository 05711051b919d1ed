use crate::arith::bipoly::{BiPoly, Mono};
use crate::arith::field::Field;

/// Piecewise weight: one `(w_x, w_y)` pair per face of a Newton polygon,
/// ordered from the face touching the x-axis to the face touching the y-axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    faces: Vec<(u32, u32)>,
}

impl Weight {
    pub fn new(faces: Vec<(u32, u32)>) -> Self {
        assert!(!faces.is_empty() && faces.len() <= 2, "one or two faces");
        assert!(faces.iter().all(|&(a, b)| a > 0 && b > 0), "positive weights");
        if let [(a1, b1), (a2, b2)] = faces[..] {
            // -w_y/w_x strictly increasing along the polygon.
            assert!((b1 as u64) * (a2 as u64) > (b2 as u64) * (a1 as u64), "faces out of order");
        }
        Weight { faces }
    }

    pub fn single(wx: u32, wy: u32) -> Self {
        Self::new(vec![(wx, wy)])
    }

    pub fn standard() -> Self {
        Self::single(1, 1)
    }

    pub fn faces(&self) -> &[(u32, u32)] {
        &self.faces
    }

    pub fn degree(&self, m: Mono) -> i64 {
        weighted_degree(self, m)
    }
}

/// Minimum over the faces of the weighted degree of a monomial.
pub fn weighted_degree(w: &Weight, m: Mono) -> i64 {
    w.faces.iter().map(|&(a, b)| a as i64 * m.0 as i64 + b as i64 * m.1 as i64).min().unwrap()
}

/// Terms of weighted degree at most `j`.
pub fn weighted_jet<F: Field>(f: &BiPoly<F>, w: &Weight, j: i64) -> BiPoly<F> {
    f.filter(|m| weighted_degree(w, m) <= j)
}

/// Terms of weighted degree exactly `j`.
pub fn weighted_part<F: Field>(f: &BiPoly<F>, w: &Weight, j: i64) -> BiPoly<F> {
    f.filter(|m| weighted_degree(w, m) == j)
}

/// Membership of a monomial in the filtration `E_d^w`.
pub fn in_filtration(w: &Weight, d: i64, m: Mono) -> bool {
    weighted_degree(w, m) >= d
}

/// Lowest weighted degree among the terms.
pub fn weighted_order<F: Field>(f: &BiPoly<F>, w: &Weight) -> Option<i64> {
    f.terms().map(|(m, _)| weighted_degree(w, m)).min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::Rational;

    #[test]
    fn degrees() {
        assert_eq!(weighted_degree(&Weight::single(8, 3), (1, 6)), 26);
        assert_eq!(weighted_degree(&Weight::single(6, 3), (2, 2)), 18);
        assert_eq!(weighted_degree(&Weight::new(vec![(1, 2), (2, 1)]), (2, 2)), 6);
    }

    #[test]
    fn jets() {
        let f = BiPoly::<Rational>::from_int_terms(&[((3, 0), 1), ((1, 6), 1), ((0, 9), 1)]);
        assert_eq!(weighted_jet(&f, &Weight::single(8, 3), 24), BiPoly::from_int_terms(&[((3, 0), 1)]));
        let g = BiPoly::<Rational>::from_int_terms(&[((3, 0), 1), ((2, 2), 1), ((0, 7), 1)]);
        assert_eq!(
            weighted_jet(&g, &Weight::single(2, 1), 6),
            BiPoly::from_int_terms(&[((3, 0), 1), ((2, 2), 1)])
        );
        assert_eq!(weighted_jet(&g, &Weight::standard(), 4), g.jet(4));
    }
}
