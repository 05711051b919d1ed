use std::fmt;

use num::integer::lcm;

use super::weight::{weighted_degree, Weight};
use crate::arith::bipoly::{fmt_mono, BiPoly, Mono};
use crate::arith::rational::{rat, Rational};
use crate::error::{Error, Result};

/// Main type of a unimodal corank-2 singularity (real main types: `Y` and
/// `Ytilde` are distinguished).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    E12,
    E13,
    E14,
    Z11,
    Z12,
    Z13,
    W12,
    W13,
    X9,
    J10,
    X9k(u32),
    J10k(u32),
    Y(u32, u32),
    Ytilde(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Position {
    Below,
    On,
    Above,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    /// `a != 0`.
    NonZero,
    /// `a^2 != 4` for the subtypes whose sign vector has equal entries (or
    /// the single sign `+`).
    SquareNot4,
}

/// Coefficient slot of a normal-form term.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    One,
    /// The sign with this index in the sign vector.
    Sign(usize),
    /// `2 * sign`, for the cross term of `(x^2+y^2)^2`.
    TwiceSign(usize),
    Param,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TypeData {
    pub family: Family,
    pub weight: Weight,
    pub degree: i64,
    /// Monomials of the normal form lying on the polygon.
    pub support: Vec<Mono>,
    pub moduli: Mono,
    pub moduli_degree: i64,
    pub low_jet_degree: u32,
    pub restrictions: Vec<Restriction>,
    pub milnor: u32,
    pub sign_arity: usize,
    pub template: Vec<(Mono, Slot)>,
}

fn one_face(
    family: Family,
    w: (u32, u32),
    template: Vec<(Mono, Slot)>,
    low: u32,
    milnor: u32,
    restrictions: Vec<Restriction>,
) -> TypeData {
    let weight = Weight::single(w.0, w.1);
    let lead = template.iter().find(|(_, s)| *s != Slot::Param).unwrap().0;
    let degree = weighted_degree(&weight, lead);
    let moduli = template.iter().find(|(_, s)| *s == Slot::Param).unwrap().0;
    let moduli_degree = weighted_degree(&weight, moduli);
    let support = template.iter().map(|(m, _)| *m).filter(|m| weighted_degree(&weight, *m) == degree).collect();
    let sign_arity = template
        .iter()
        .filter_map(|(_, s)| match s {
            Slot::Sign(i) | Slot::TwiceSign(i) => Some(i + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    TypeData { family, weight, degree, support, moduli, moduli_degree, low_jet_degree: low, restrictions, milnor, sign_arity, template }
}

/// Two-face weight through `(a, 0)`, `(2, 2)` and `(0, b)`, scaled so that
/// the polygon has constant weighted degree.
fn two_face(a: u32, b: u32) -> (Weight, i64) {
    let (f1, d1) = ((2, a - 2), 2 * a);
    let (f2, d2) = ((b - 2, 2), 2 * b);
    let l = lcm(d1, d2);
    let (s1, s2) = (l / d1, l / d2);
    (Weight::new(vec![(f1.0 * s1, f1.1 * s1), (f2.0 * s2, f2.1 * s2)]), l as i64)
}

fn two_face_cubic(b: u32) -> (Weight, i64) {
    let (f1, d1) = ((2, 1), 6);
    let (f2, d2) = ((b - 2, 2), 2 * b);
    let l = lcm(d1, d2);
    let (s1, s2) = (l / d1, l / d2);
    (Weight::new(vec![(f1.0 * s1, f1.1 * s1), (f2.0 * s2, f2.1 * s2)]), l as i64)
}

fn hyperbolic(
    family: Family,
    (weight, degree): (Weight, i64),
    template: Vec<(Mono, Slot)>,
    low: u32,
    milnor: u32,
) -> TypeData {
    let support = template.iter().map(|(m, _)| *m).filter(|m| weighted_degree(&weight, *m) == degree).collect();
    let moduli = template.iter().find(|(_, s)| *s == Slot::Param).unwrap().0;
    let moduli_degree = weighted_degree(&weight, moduli);
    let sign_arity = template
        .iter()
        .filter_map(|(_, s)| match s {
            Slot::Sign(i) | Slot::TwiceSign(i) => Some(i + 1),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    TypeData {
        family,
        weight,
        degree,
        support,
        moduli,
        moduli_degree,
        low_jet_degree: low,
        restrictions: vec![Restriction::NonZero],
        milnor,
        sign_arity,
        template,
    }
}

use Slot::{One, Param, Sign, TwiceSign};

pub fn type_data(t: Family) -> Result<TypeData> {
    let td = match t {
        Family::E12 => one_face(t, (7, 3), vec![((3, 0), One), ((0, 7), One), ((1, 5), Param)], 3, 12, vec![]),
        Family::E13 => one_face(t, (5, 2), vec![((3, 0), One), ((1, 5), One), ((0, 8), Param)], 3, 13, vec![]),
        Family::E14 => one_face(t, (8, 3), vec![((3, 0), One), ((0, 8), Sign(0)), ((1, 6), Param)], 3, 14, vec![]),
        Family::Z11 => one_face(t, (4, 3), vec![((3, 1), One), ((0, 5), One), ((1, 4), Param)], 4, 11, vec![]),
        Family::Z12 => one_face(t, (3, 2), vec![((3, 1), One), ((1, 4), One), ((2, 3), Param)], 4, 12, vec![]),
        Family::Z13 => one_face(t, (5, 3), vec![((3, 1), One), ((0, 6), Sign(0)), ((1, 5), Param)], 4, 13, vec![]),
        Family::W12 => one_face(t, (5, 4), vec![((4, 0), Sign(0)), ((0, 5), One), ((2, 3), Param)], 4, 12, vec![]),
        Family::W13 => one_face(t, (4, 3), vec![((4, 0), Sign(0)), ((1, 4), One), ((0, 6), Param)], 4, 13, vec![]),
        Family::X9 => one_face(
            t,
            (1, 1),
            vec![((4, 0), Sign(0)), ((2, 2), Param), ((0, 4), Sign(1))],
            4,
            9,
            vec![Restriction::SquareNot4],
        ),
        Family::J10 => one_face(
            t,
            (6, 3),
            vec![((3, 0), One), ((2, 2), Param), ((1, 4), Sign(0))],
            3,
            10,
            vec![Restriction::SquareNot4],
        ),
        Family::X9k(k) if k > 0 => hyperbolic(
            t,
            two_face(4, 4 + k),
            vec![((4, 0), Sign(0)), ((2, 2), Sign(1)), ((0, 4 + k), Param)],
            4,
            9 + k,
        ),
        Family::J10k(k) if k > 0 => hyperbolic(
            t,
            two_face_cubic(6 + k),
            vec![((3, 0), One), ((2, 2), Sign(0)), ((0, 6 + k), Param)],
            3,
            10 + k,
        ),
        Family::Y(r, s) if r > 4 && s > 4 => hyperbolic(
            t,
            two_face(r, s),
            vec![((2, 2), Sign(0)), ((r, 0), Sign(1)), ((0, s), Param)],
            4,
            r + s + 1,
        ),
        Family::Ytilde(r) if r > 4 => {
            let mut td = hyperbolic(
                t,
                two_face(r, r),
                vec![((4, 0), Sign(0)), ((2, 2), TwiceSign(0)), ((0, 4), Sign(0)), ((r, 0), Param)],
                4,
                2 * r + 1,
            );
            // Over C the type is Y_{r,r}; its polygon is spanned by x^2y^2, x^r, y^r.
            td.support = vec![(2, 2), (r, 0), (0, r)];
            td
        }
        _ => return Err(Error::OutOfScope(format!("unsupported type {t:?}"))),
    };
    Ok(td)
}

pub fn polygon_position(td: &TypeData, m: Mono) -> Position {
    let d = weighted_degree(&td.weight, m);
    match d.cmp(&td.degree) {
        std::cmp::Ordering::Less => Position::Below,
        std::cmp::Ordering::Equal => Position::On,
        std::cmp::Ordering::Greater => Position::Above,
    }
}

impl TypeData {
    /// All admissible sign vectors, in output order.
    pub fn sign_vectors(&self) -> Vec<Vec<i8>> {
        match self.sign_arity {
            0 => vec![vec![]],
            1 => vec![vec![1], vec![-1]],
            _ => vec![vec![1, 1], vec![-1, -1], vec![1, -1], vec![-1, 1]],
        }
    }

    /// The normal form with the given signs and parameter value.
    pub fn normal_form(&self, signs: &[i8], a: &Rational) -> BiPoly<Rational> {
        let mut f = BiPoly::zero();
        for (m, slot) in &self.template {
            let c = match slot {
                One => rat(1),
                Sign(i) => rat(signs[*i] as i64),
                TwiceSign(i) => rat(2 * signs[*i] as i64),
                Param => a.clone(),
            };
            f.add_term(*m, c);
        }
        f
    }

    /// Rendering with the literal `a` for the parameter.
    pub fn normal_form_string(&self, signs: &[i8]) -> String {
        if let Family::Ytilde(r) = self.family {
            let lead = if signs[0] < 0 { "-" } else { "" };
            return format!("{lead}(x^2+y^2)^2+a*x^{r}");
        }
        let mut s = String::new();
        for (m, slot) in &self.template {
            let (neg, coeff) = match slot {
                One => (false, String::new()),
                Sign(i) => (signs[*i] < 0, String::new()),
                TwiceSign(i) => (signs[*i] < 0, "2*".into()),
                Param => (false, "a*".into()),
            };
            if neg {
                s.push('-');
            } else if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&coeff);
            s.push_str(&fmt_mono(*m));
        }
        s
    }

    /// Whether a rational parameter value respects the restrictions.
    pub fn admissible(&self, signs: &[i8], a: &Rational) -> bool {
        self.restrictions.iter().all(|r| match r {
            Restriction::NonZero => !num::Zero::is_zero(a),
            Restriction::SquareNot4 => {
                let restricted = match signs {
                    [s] => *s > 0,
                    _ => signs.iter().all(|s| *s == signs[0]),
                };
                !restricted || a * a != rat(4)
            }
        })
    }
}

impl Family {
    /// The eight exceptional families, `X9`, `J10`, and the hyperbolic
    /// families with `k <= depth`, `Y_{r,s}` for `5 <= r <= s <= 4 + depth`
    /// and `Ytilde_r` for `r <= 4 + depth`.
    pub fn catalog(depth: u32) -> Vec<Family> {
        use Family::*;
        let mut out = vec![E12, E13, E14, Z11, Z12, Z13, W12, W13, X9, J10];
        out.extend((1..=depth).map(X9k));
        out.extend((1..=depth).map(J10k));
        for r in 5..=4 + depth {
            out.extend((r..=4 + depth).map(|s| Y(r, s)));
        }
        out.extend((5..=4 + depth).map(Ytilde));
        out
    }

    pub fn label(&self, signs: &[i8]) -> String {
        let base = match self {
            Family::E12 => "E12".into(),
            Family::E13 => "E13".into(),
            Family::E14 => "E14".into(),
            Family::Z11 => "Z11".into(),
            Family::Z12 => "Z12".into(),
            Family::Z13 => "Z13".into(),
            Family::W12 => "W12".into(),
            Family::W13 => "W13".into(),
            Family::X9 => "X9".into(),
            Family::J10 => "J10".into(),
            Family::X9k(k) => format!("X{}", 9 + k),
            Family::J10k(k) => format!("J{}", 10 + k),
            Family::Y(r, s) => format!("Y{r},{s}"),
            Family::Ytilde(r) => format!("Ytilde{r}"),
        };
        let signs: String = signs.iter().map(|s| if *s > 0 { '+' } else { '-' }).collect();
        format!("{base}{signs}")
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exceptional_rows() {
        let e14 = type_data(Family::E14).unwrap();
        assert_eq!(e14.weight, Weight::single(8, 3));
        assert_eq!(e14.degree, 24);
        assert_eq!(e14.moduli, (1, 6));
        assert_eq!(e14.moduli_degree, 26);
        assert!(e14.restrictions.is_empty());
        assert_eq!(polygon_position(&e14, (1, 6)), Position::Above);
    }

    #[test]
    fn parabolic_rows() {
        let j10 = type_data(Family::J10).unwrap();
        assert_eq!(j10.weight, Weight::single(6, 3));
        assert_eq!(j10.degree, 18);
        assert_eq!(j10.support, vec![(3, 0), (2, 2), (1, 4)]);
        assert_eq!(j10.restrictions, vec![Restriction::SquareNot4]);
        assert_eq!(polygon_position(&j10, (0, 4)), Position::Below);
        assert_eq!(polygon_position(&j10, (0, 6)), Position::On);
    }

    #[test]
    fn hyperbolic_rows() {
        let x12 = type_data(Family::X9k(3)).unwrap();
        let faces = x12.weight.faces();
        assert_eq!(faces.len(), 2);
        // Second face is proportional to (mu - 7, 2) with mu = 12.
        assert_eq!(faces[1].0 * 2, faces[1].1 * 5);
        assert_eq!(x12.support, vec![(4, 0), (2, 2), (0, 7)]);
        assert_eq!(x12.restrictions, vec![Restriction::NonZero]);
        assert!(type_data(Family::X9k(0)).is_err());
        assert!(type_data(Family::Y(4, 5)).is_err());
    }

    #[test]
    fn labels_and_strings() {
        let x9 = type_data(Family::X9).unwrap();
        assert_eq!(x9.normal_form_string(&[-1, 1]), "-x^4+a*x^2*y^2+y^4");
        assert_eq!(Family::X9.label(&[-1, 1]), "X9-+");
        assert_eq!(Family::Ytilde(5).label(&[1]), "Ytilde5+");
        assert_eq!(Family::Y(5, 6).label(&[1, -1]), "Y5,6+-");
        assert_eq!(Family::X9k(3).label(&[1, 1]), "X12++");
        let yt = type_data(Family::Ytilde(6)).unwrap();
        assert_eq!(yt.normal_form_string(&[-1]), "-(x^2+y^2)^2+a*x^6");
    }
}
