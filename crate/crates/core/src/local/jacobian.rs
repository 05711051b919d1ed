use crate::arith::auto::Automorphism;
use crate::arith::bipoly::{BiPoly, Mono};
use crate::arith::field::Field;
use crate::error::{Error, Result};
use crate::local::linalg::solve;
use crate::newton::weight::{weighted_degree, weighted_part, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X,
    Y,
}

fn lowest_terms<F: Field>(p: &BiPoly<F>, w: (u32, u32)) -> Vec<(Mono, F)> {
    let wt = Weight::single(w.0, w.1);
    let Some(min) = p.terms().map(|(m, _)| weighted_degree(&wt, m)).min() else { return vec![] };
    p.terms().filter(|(m, _)| weighted_degree(&wt, *m) == min).map(|(m, c)| (m, c.clone())).collect()
}

fn divide_by<F: Field>(t: (Mono, &F), cands: &[(Mono, F)]) -> Option<BiPoly<F>> {
    let (m, c) = t;
    cands
        .iter()
        .find(|(d, _)| d.0 <= m.0 && d.1 <= m.1 && *d != m)
        .map(|(d, k)| BiPoly::monomial(c.clone() / k.clone(), (m.0 - d.0, m.1 - d.1)))
}

/// Find an axis and nonconstant cofactor `q` with `t = q * m_x` (or `q * m_y`), where
/// `m_x` is a lowest `u2`-degree term of `df0/dx` and `m_y` a lowest
/// `u1`-degree term of `df0/dy`. The grading `(u1, u2)` is standard when
/// `grading` is `None`, and the faces of `grading` otherwise.
pub fn jacobian_term_division<F: Field>(
    f0: &BiPoly<F>,
    t: (Mono, &F),
    grading: Option<&Weight>,
) -> Option<(Axis, BiPoly<F>)> {
    let (u1, u2) = match grading {
        None => ((1, 1), (1, 1)),
        Some(w) => {
            let fs = w.faces();
            (fs[0], fs[fs.len() - 1])
        }
    };
    if let Some(q) = divide_by(t, &lowest_terms(&f0.deriv_x(), u2)) {
        return Some((Axis::X, q));
    }
    divide_by(t, &lowest_terms(&f0.deriv_y(), u1)).map(|q| (Axis::Y, q))
}

/// The coordinate change removing a term: `x -> x - q` or `y -> y - q`.
pub fn elimination_map<F: Field>(axis: Axis, q: &BiPoly<F>) -> Result<Automorphism<F>> {
    match axis {
        Axis::X => Automorphism::shift_x(-q),
        Axis::Y => Automorphism::shift_y(-q),
    }
}

/// `piece = v1 * df0/dx + v2 * df0/dy + sum c_i e_i` in one graded piece.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedReduction<F: Field> {
    pub v1: BiPoly<F>,
    pub v2: BiPoly<F>,
    pub coefficients: Vec<(Mono, F)>,
}

fn monomials_of_degree(w: (u32, u32), d: i64) -> Vec<Mono> {
    let mut out = vec![];
    if d < 0 {
        return out;
    }
    for i in 0..=(d / w.0 as i64) {
        let rest = d - i * w.0 as i64;
        if rest % w.1 as i64 == 0 {
            out.push((i as u32, (rest / w.1 as i64) as u32));
        }
    }
    out
}

/// Express the w-degree `j` part of `f` modulo the Jacobian ideal of the
/// quasihomogeneous `f0` in terms of the monomials `system`. Prefers `v2 = 0`.
pub fn reduce_mod_jacobian_graded<F: Field>(
    f: &BiPoly<F>,
    f0: &BiPoly<F>,
    w: &Weight,
    j: i64,
    system: &[Mono],
) -> Result<GradedReduction<F>> {
    let wf = w.faces()[0];
    let piece = weighted_part(f, w, j);
    let d0 = f0.terms().map(|(m, _)| weighted_degree(w, m)).min().unwrap_or(0);
    let fx = f0.deriv_x();
    let fy = f0.deriv_y();
    let b1 = monomials_of_degree(wf, j - d0 + wf.0 as i64);
    let b2 = monomials_of_degree(wf, j - d0 + wf.1 as i64);
    let sys: Vec<Mono> = system.iter().copied().filter(|m| weighted_degree(w, *m) == j).collect();
    let rows_for = |use_v2: bool| -> (Vec<Vec<F>>, usize) {
        let mut cols: Vec<BiPoly<F>> = b1.iter().map(|m| fx.mul_mono(*m)).collect();
        cols.extend(sys.iter().map(|m| BiPoly::monomial(F::one(), *m)));
        if use_v2 {
            cols.extend(b2.iter().map(|m| fy.mul_mono(*m)));
        }
        let eqs = monomials_of_degree(wf, j);
        let n = cols.len();
        let rows = eqs
            .iter()
            .map(|e| {
                let mut r: Vec<F> = cols.iter().map(|c| c.coeff(*e)).collect();
                r.push(piece.coeff(*e));
                r
            })
            .collect();
        (rows, n)
    };
    for use_v2 in [false, true] {
        let (rows, n) = rows_for(use_v2);
        if let Some(x) = solve(rows, n) {
            let mut v1 = BiPoly::zero();
            let mut v2 = BiPoly::zero();
            let mut coefficients = vec![];
            for (k, m) in b1.iter().enumerate() {
                v1.add_term(*m, x[k].clone());
            }
            for (k, m) in sys.iter().enumerate() {
                coefficients.push((*m, x[b1.len() + k].clone()));
            }
            if use_v2 {
                for (k, m) in b2.iter().enumerate() {
                    v2.add_term(*m, x[b1.len() + sys.len() + k].clone());
                }
            }
            return Ok(GradedReduction { v1, v2, coefficients });
        }
    }
    Err(Error::Inconsistent(format!("graded piece of degree {j} not in Jac + system")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{rat, ratio, Rational};

    fn q(ts: &[((u32, u32), i64)]) -> BiPoly<Rational> {
        BiPoly::from_int_terms(ts)
    }

    #[test]
    fn term_division() {
        let f0 = q(&[((3, 0), 1), ((0, 8), 1)]);
        let one = rat(1);
        assert_eq!(
            jacobian_term_division(&f0, ((2, 3), &one), None),
            Some((Axis::X, BiPoly::monomial(ratio(1, 3), (0, 3))))
        );
        assert_eq!(
            jacobian_term_division(&f0, ((1, 7), &one), None),
            Some((Axis::Y, BiPoly::monomial(ratio(1, 8), (1, 0))))
        );
        assert_eq!(jacobian_term_division(&f0, ((0, 7), &one), None), None);
    }

    #[test]
    fn graded_pieces() {
        let f0 = q(&[((3, 0), 1), ((0, 8), 1)]);
        let w = Weight::single(8, 3);
        let c = rat(7);
        let g = BiPoly::monomial(c.clone(), (2, 3));
        let r = reduce_mod_jacobian_graded(&g, &f0, &w, 25, &[(1, 6)]).unwrap();
        assert_eq!(r.v1, BiPoly::monomial(ratio(7, 3), (0, 3)));
        assert!(r.v2.is_zero());
        let g = q(&[((1, 6), 5)]);
        let r = reduce_mod_jacobian_graded(&g, &f0, &w, 26, &[(1, 6)]).unwrap();
        assert!(r.v1.is_zero() && r.v2.is_zero());
        assert_eq!(r.coefficients, vec![((1, 6), rat(5))]);
        let g = q(&[((2, 6), 1)]);
        let r = reduce_mod_jacobian_graded(&g, &f0, &w, 34, &[(1, 6)]).unwrap();
        assert_eq!(r.v1, BiPoly::monomial(ratio(1, 3), (0, 6)));
    }
}
