//! Round trips through the factor paths and the quadratic decompositions.

use num_complex::Complex64;
use proptest::prelude::*;
use ternary_cubic::factor::{
    exact_product, factor, factor_binary_cubic, factor_generic, factor_singular, two_cubes, BinaryCubic, Method,
    RootMethod,
};
use ternary_cubic::numeric::ComplexLine;
use ternary_cubic::quadratics::{
    extract_square, quad_discriminant, square_shortcut, square_test, sum_of_squares, tangent_split,
};
use ternary_cubic::{CubicForm, LinearForm, QuadraticForm, Rational};

fn line() -> impl Strategy<Value = LinearForm> {
    prop::array::uniform3(-5i64..=5)
        .prop_filter("nonzero", |c| c.iter().any(|&v| v != 0))
        .prop_map(LinearForm::from_ints)
}

/// Independent, concurrent and repeated triples.
fn triple() -> impl Strategy<Value = [LinearForm; 3]> {
    prop_oneof![
        (line(), line(), line()).prop_map(|(a, b, c)| [a, b, c]),
        (line(), line(), -3i64..=3, -3i64..=3).prop_map(|(a, b, s, t)| {
            let c = LinearForm::from_poly(&a.to_poly().scale(&Rational::from_int(s)).add(&b.to_poly().scale(&Rational::from_int(t)))).unwrap();
            [a, b, c]
        }),
        (line(), line()).prop_map(|(a, b)| [a.clone(), a, b]),
        line().prop_map(|a| [a.clone(), a.clone(), a]),
    ]
}

fn contains(lines: &[ComplexLine; 3], l: &LinearForm) -> bool {
    let want = ComplexLine::from_rational(l);
    lines.iter().any(|x| x.distance_projective(&want) < 1e-7)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, ..ProptestConfig::default() })]

    #[test]
    fn factor_round_trip(t in triple()) {
        let f = exact_product(&t);
        prop_assume!(!f.is_zero());
        let r = factor(&f).unwrap();
        prop_assert!(r.residual <= 1e-9, "residual {}", r.residual);
        for l in &t {
            prop_assert!(contains(&r.factors, l), "{} missing from {:?}", l, r.factors);
        }
    }

    #[test]
    fn quadratic_decompositions(c in prop::array::uniform6(-6i64..=6)) {
        let q = QuadraticForm::from_ints(c);
        let d = sum_of_squares(&q);
        prop_assert_eq!(d.recombine(), q.to_poly());
        let disc = quad_discriminant(&q);
        let square = square_test(&q).is_zero();
        let expected = if q.is_zero() { 0 } else if square { 1 } else if disc.is_zero() { 2 } else { 3 };
        prop_assert_eq!(d.len(), expected);
        if let Some(s) = square_shortcut(&q) {
            prop_assert_eq!(s, square);
        }
        if !q.is_zero() {
            prop_assert_eq!(extract_square(&q).is_ok(), square);
        }
    }

    #[test]
    fn tangent_split_round_trip(a in line(), b in line(), c in line(), c0 in -3i64..=3) {
        let q = a.to_poly().mul(&b.to_poly()).add(&c.to_poly().pow(2).scale(&Rational::from_int(c0)));
        let q = QuadraticForm::from_poly(&q).unwrap();
        let s = tangent_split(&q, &a).unwrap();
        let back = a.to_poly().mul(&s.b.to_poly()).add(&s.c.to_poly().pow(2).scale(&s.c0));
        prop_assert_eq!(back, q.to_poly());
    }

    #[test]
    fn binary_cubic_roots(c in prop::array::uniform4(-9i64..=9), cardano in any::<bool>()) {
        let b = BinaryCubic(c.map(Rational::from_int));
        prop_assume!(!b.is_zero());
        let method = if cardano { RootMethod::Cardano } else { RootMethod::Companion };
        let pairs = factor_binary_cubic(&b, method).unwrap();
        let scale = c.iter().map(|v| v.abs()).max().unwrap() as f64;
        for x in [(1.0, 0.0), (0.0, 1.0), (0.7, -1.3), (-2.0, 0.5)] {
            let (x1, x2) = (Complex64::new(x.0, 0.0), Complex64::new(x.1, 0.0));
            let p: Complex64 = pairs.iter().map(|(a, b)| a * x1 + b * x2).product();
            let mag = (x.0 as f64).abs().max(x.1.abs()).powi(3);
            prop_assert!((p - b.eval(x1, x2)).norm() <= 1e-10 * scale * mag.max(1.0));
        }
    }

    #[test]
    fn two_cubes_round_trip(a in line(), b in line(), a0 in 1i64..=4, b0 in -4i64..=-1) {
        let cube = |l: &LinearForm, k: i64| l.to_poly().pow(3).scale(&Rational::from_int(k));
        let f = CubicForm::from_poly(&cube(&a, a0).add(&cube(&b, b0))).unwrap();
        // independent lines only
        prop_assume!(!ternary_cubic::concomitants::f6u(&f).is_zero());
        let t = two_cubes(&f).unwrap();
        prop_assert!(t.residual < 1e-9);
        let (wa, wb) = (ComplexLine::from_rational(&a), ComplexLine::from_rational(&b));
        let hit = |x: &ComplexLine| x.distance_projective(&wa) < 1e-7 || x.distance_projective(&wb) < 1e-7;
        prop_assert!(hit(&t.a) && hit(&t.b));
    }

    #[test]
    fn generic_and_singular_agree(a in line(), b in line(), s in 1i64..=3, t in 1i64..=3) {
        // concurrent but pairwise independent: F ≢ 0 and Δ = 0
        let c = LinearForm::from_poly(&a.to_poly().scale(&Rational::from_int(s)).add(&b.to_poly().scale(&Rational::from_int(t)))).unwrap();
        let f = exact_product(&[a, b, c]);
        prop_assume!(!ternary_cubic::concomitants::f6u(&f).is_zero());
        let g = factor_generic(&f).unwrap();
        let h = factor_singular(&f).unwrap();
        prop_assert_eq!(g.method, Method::Generic);
        prop_assert!(g.same_lines(&h, 1e-8));
    }
}

#[test]
fn zero_and_rank_one_inputs() {
    assert!(sum_of_squares(&QuadraticForm::from_ints([0; 6])).is_empty());
    let f = CubicForm::parse("x1 x2 x3").unwrap();
    assert_eq!(factor(&f).unwrap().exact.unwrap().scalar, Rational::ONE);
}
