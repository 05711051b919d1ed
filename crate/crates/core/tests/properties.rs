use proptest::prelude::*;
use realnf_core::arith::{rat, ratio};
use realnf_core::local::milnor_number;
use realnf_core::newton::type_data;
use realnf_core::roots::{factor_rational, SturmChain};
use realnf_core::{classify, Automorphism, BiPoly, Family, Rational, UPoly};

fn bipoly(max_deg: u32, max_terms: usize) -> impl Strategy<Value = BiPoly<Rational>> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg), -5i64..=5, 1i64..=3), 0..=max_terms).prop_map(|ts| {
        BiPoly::from_terms(ts.into_iter().map(|(m, n, d)| (m, ratio(n, d))))
    })
}

fn upoly(max_deg: usize) -> impl Strategy<Value = UPoly<Rational>> {
    prop::collection::vec(-20i64..=20, 1..=max_deg + 1)
        .prop_map(|cs| UPoly::from_ints(&cs))
        .prop_filter("nonzero", |p| !p.is_zero())
}

/// Entries in [-3, 3] with determinant +-1.
fn unimodular() -> impl Strategy<Value = Automorphism<Rational>> {
    [(-3i64..=3), (-3i64..=3), (-3i64..=3), (-3i64..=3)]
        .prop_filter("det +-1", |[a, b, c, d]| (a * d - b * c).abs() == 1)
        .prop_map(|[a, b, c, d]| Automorphism::linear(rat(a), rat(b), rat(c), rat(d)).unwrap())
}

/// A unimodular map after `x -> x + h1`, `y -> y + h2` with `h1, h2` of
/// order at least 2 and total degree at most `deg`.
fn nonlinear_of(deg: u32) -> impl Strategy<Value = Automorphism<Rational>> {
    (unimodular(), bipoly(deg, 3), bipoly(deg, 3)).prop_map(move |(l, h1, h2)| {
        let keep = |m: (u32, u32)| m.0 + m.1 >= 2 && m.0 + m.1 <= deg;
        let x = &BiPoly::x() + &h1.filter(keep);
        let y = &BiPoly::y() + &h2.filter(keep);
        l.compose(&Automorphism::new(x, y).unwrap())
    })
}

fn nonlinear() -> impl Strategy<Value = Automorphism<Rational>> {
    nonlinear_of(3)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn substitution_is_a_ring_map(phi in nonlinear(), f in bipoly(4, 5), g in bipoly(4, 5)) {
        prop_assert_eq!(phi.apply(&(&f + &g)), &phi.apply(&f) + &phi.apply(&g));
        prop_assert_eq!(phi.apply(&(&f * &g)), &phi.apply(&f) * &phi.apply(&g));
    }

    #[test]
    fn composition(phi in nonlinear_of(2), psi in nonlinear_of(2), f in bipoly(2, 4)) {
        prop_assert_eq!(phi.compose(&psi).apply(&f), phi.apply(&psi.apply(&f)));
    }

    #[test]
    fn linear_inverse(phi in unimodular(), f in bipoly(5, 6)) {
        let inv = phi.linear_inverse().unwrap();
        prop_assert_eq!(inv.apply(&phi.apply(&f)), f);
    }

    #[test]
    fn sturm_count_matches_isolation(p in upoly(12)) {
        let chain = SturmChain::new(&p).unwrap();
        let is = chain.isolate();
        prop_assert_eq!(chain.count(&realnf_core::Interval::real_line()), is.len());
        for (k, i) in is.iter().enumerate() {
            prop_assert_eq!(chain.count(i), 1);
            if let Some(next) = is.get(k + 1) {
                prop_assert!(i.intersect(next).is_empty());
            }
        }
    }

    #[test]
    fn factors_multiply_back(ps in prop::collection::vec(upoly(4), 1..=4)) {
        let p = ps.iter().fold(UPoly::from_ints(&[1]), |acc, q| &acc * q);
        let fac = factor_rational(&p).unwrap();
        prop_assert_eq!(fac.expand(), p);
        let degree: u32 = fac.factors.iter().map(|(f, m)| f.degree().unwrap() * m).sum();
        prop_assert_eq!(Some(degree), ps.iter().fold(Some(0), |d, q| Some(d? + q.degree()?)));
    }
}

fn subtype() -> impl Strategy<Value = (Family, Vec<i8>, Rational)> {
    let families = Family::catalog(2);
    (0..families.len(), 0usize..4, -6i64..=6, 1i64..=3).prop_filter_map("admissible", move |(i, s, n, d)| {
        let family = families[i];
        let td = type_data(family).ok()?;
        let signs = td.sign_vectors();
        let signs = signs[s % signs.len()].clone();
        let a = ratio(n, d);
        td.admissible(&signs, &a).then_some((family, signs, a))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn milnor_number_is_invariant((family, signs, a) in subtype(), phi in nonlinear()) {
        let td = type_data(family).unwrap();
        let f = td.normal_form(&signs, &a);
        prop_assert_eq!(milnor_number(&phi.apply(&f)).finite(), Some(td.milnor));
    }

    #[test]
    fn classification_is_invariant((family, signs, a) in subtype(), phi in unimodular(), tail in bipoly(20, 3)) {
        let td = type_data(family).unwrap();
        let f = td.normal_form(&signs, &a);
        let tail = tail.filter(|m| m.0 + m.1 > td.milnor + 1);
        let g = &phi.apply(&f) + &tail;
        let (x, y) = (classify(&f).unwrap(), classify(&g).unwrap());
        prop_assert_eq!(x.len(), y.len());
        for (r, s) in x.iter().zip(&y) {
            prop_assert_eq!(&r.ty, &s.ty);
            prop_assert!(r.parameter.same_as(&s.parameter), "{} vs {}", r, s);
        }
    }
}
