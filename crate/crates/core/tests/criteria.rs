//! Concordance of the reducibility criteria on random rational cubics.

use proptest::prelude::*;
use ternary_cubic::classify::{
    brill_test, brioschi_normalize, classify, glenn_corollary, glenn_test, is_completely_reducible, Criterion, Kind,
};
use ternary_cubic::factor::exact_product;
use ternary_cubic::{CubicForm, LinearForm};

fn line() -> impl Strategy<Value = LinearForm> {
    prop::array::uniform3(-4i64..=4).prop_map(LinearForm::from_ints)
}

fn product() -> impl Strategy<Value = CubicForm> {
    (line(), line(), line()).prop_map(|(a, b, c)| exact_product(&[a, b, c]))
}

fn random_cubic() -> impl Strategy<Value = CubicForm> {
    prop::array::uniform10(-5i64..=5).prop_map(CubicForm::from_ints)
}

/// Half constructed products, half unconstrained coefficients.
fn mixed() -> impl Strategy<Value = CubicForm> {
    prop_oneof![product(), random_cubic()]
}

const UNGATED: [Criterion; 5] = [
    Criterion::Gamma,
    Criterion::Pi,
    Criterion::HessianProportional,
    Criterion::DeltaSqMinusSF,
    Criterion::FDeltaMinusSuuuSqF,
];

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn criteria_agree(f in mixed()) {
        let gamma = is_completely_reducible(&f, Criterion::Gamma).unwrap();
        for c in UNGATED {
            prop_assert_eq!(is_completely_reducible(&f, c).unwrap(), gamma, "{}", c);
        }
        for c in Criterion::ALL.into_iter().filter(|c| c.needs_nonzero_s()) {
            match is_completely_reducible(&f, c) {
                Ok(v) => prop_assert_eq!(v, gamma, "{}", c),
                Err(e) => prop_assert_eq!(e.code(), "CriterionInapplicable"),
            }
        }
        prop_assert_eq!(classify(&f).kind.is_completely_reducible(), gamma);
        if let Some(g) = glenn_test(&f) {
            prop_assert_eq!(g, gamma);
        }
        if let Some(b) = brill_test(&f) {
            prop_assert_eq!(b.five, gamma);
            if let Some(s) = b.shortcut {
                prop_assert_eq!(s, gamma);
            }
        }
        if let Ok(r) = brioschi_normalize(&f) {
            prop_assert!(r.shifted.coeff(&[1, 3, 3]).is_zero() && r.shifted.coeff(&[2, 3, 3]).is_zero());
            prop_assert_eq!(r.shifted.coeff(&[3, 3, 3]), f.coeff(&[3, 3, 3]));
            if let Some(v) = r.reducible {
                prop_assert_eq!(v, gamma);
            }
        }
    }

    #[test]
    fn products_are_reducible(f in product()) {
        prop_assert!(classify(&f).kind.is_completely_reducible());
    }

    #[test]
    fn corollary_agrees(mut c in prop::array::uniform10(-4i64..=4), a in 1i64..=3, b in -3i64..=-1) {
        // f111 = f222 = 0, f112 f122 ≠ 0
        c[0] = 0; c[1] = a; c[2] = b; c[3] = 0;
        let f = CubicForm::from_ints(c);
        let r = glenn_corollary(&f).unwrap();
        prop_assert_eq!(r.reducible, is_completely_reducible(&f, Criterion::Gamma).unwrap());
    }

    #[test]
    fn corollary_products(p in -3i64..=3, q in 1i64..=3, r in -3i64..=3, s in 1i64..=3, t in -3i64..=3, w in -3i64..=3) {
        // (q x2 + p x3)(s x1 + r x3)(x1 + t x2 + w x3) has f111 = f222 = 0
        let f = exact_product(&[
            LinearForm::from_ints([0, q, p]),
            LinearForm::from_ints([s, 0, r]),
            LinearForm::from_ints([1, t, w]),
        ]);
        prop_assume!(!f.coeff(&[1, 1, 2]).is_zero() && !f.coeff(&[1, 2, 2]).is_zero());
        let rep = glenn_corollary(&f).unwrap();
        prop_assert!(rep.reducible);
        let (k, [a, b, c]) = rep.factors.unwrap();
        prop_assert_eq!(exact_product(&[a, b, c]).to_poly().scale(&k), f.to_poly());
    }
}

#[test]
fn hierarchy_on_witnesses() {
    let cases = [
        ("x1^3 + 3x1^2 x2 + 3x1 x2^2 + x2^3", Kind::PerfectCube),
        ("x1 x2^2 + x2^3", Kind::LineTimesSquare),
        ("x1^2 x2 + x1 x2^2", Kind::DependentProduct),
        ("x1 x2 x3", Kind::CompletelyReducibleGeneric),
        ("x1^3 + x2^3 + x3^3", Kind::NotCompletelyReducible),
    ];
    for (s, kind) in cases {
        assert_eq!(classify(&CubicForm::parse(s).unwrap()).kind, kind, "{s}");
    }
}
