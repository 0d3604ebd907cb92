//! Cyclic-invariant cubics: symbolic Hessian, the reducibility test and both
//! factor routes.

use proptest::prelude::*;
use rustc_hash::FxHashMap;
use ternary_cubic::classify::{is_completely_reducible, Criterion};
use ternary_cubic::concomitants::Concomitant;
use ternary_cubic::factor::{factor, Method};
use ternary_cubic::subst::map_vars;
use ternary_cubic::symmetry::{
    basis, cyclic_root_factor, cycle_line, symmetric_decompose, symmetric_factor, symmetric_reducible, SymmetricParams,
};
use ternary_cubic::{parse, Engine, Poly, Rational, VarId};

fn symbolic_form() -> Poly {
    let [p, q, s3, e] = basis();
    let v = |n: &str| parse(n).unwrap();
    Poly::sum([&v("a0").mul(&p), &v("b0").mul(&q), &v("c0").mul(&s3), &v("d0").mul(&e)])
}

#[test]
fn hessian_in_the_parameters() {
    let f = symbolic_form();
    let delta = Engine::standard().evaluate(Concomitant::Delta, &f).unwrap();
    let [_, _, _, e] = basis();
    let k = parse("(27 a0^2 + b0^2) c0 + d0^3").unwrap();
    let want = parse("81 d0^2").unwrap().mul(&f).sub(&k.mul(&e).scale(&Rational::from_int(108)));
    assert_eq!(delta, want);
}

#[test]
fn f6u_at_the_sum_line() {
    let f = symbolic_form();
    let big_f = Engine::standard().evaluate(Concomitant::F6u, &f).unwrap();
    let ones: FxHashMap<VarId, Poly> = (1..=3).map(|i| (VarId::indexed(ternary_cubic::Family::U, i), Poly::one())).collect();
    let want = parse("729 (27 a0^2 + b0^2)^2").unwrap();
    assert_eq!(map_vars(&big_f, &ones), want);
}

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(n, d))
}

/// Tuples on the constraint: `c = −d³ / (27a² + b²)`.
fn constrained() -> impl Strategy<Value = SymmetricParams> {
    (rat(), rat(), rat())
        .prop_filter("27a² + b² ≠ 0", |(a, b, _)| !(a.is_zero() && b.is_zero()))
        .prop_map(|(a, b, d)| {
            let k = &(&Rational::from_int(27) * &(&a * &a)) + &(&b * &b);
            let c = -(&d.pow(3) / &k);
            SymmetricParams::new(a, b, c, d)
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn test_matches_classifier(a in rat(), b in rat(), c in rat(), d in rat()) {
        let p = SymmetricParams::new(a, b, c, d);
        let f = p.recombine();
        prop_assume!(!f.is_zero());
        prop_assert_eq!(symmetric_decompose(&f), Some(p.clone()));
        prop_assert_eq!(Ok(symmetric_reducible(&p)), is_completely_reducible(&f, Criterion::Gamma));
    }

    #[test]
    fn constrained_tuples_factor(p in constrained()) {
        prop_assert!(symmetric_reducible(&p));
        let f = p.recombine();
        let r = symmetric_factor(&p).unwrap();
        prop_assert_eq!(r.method, Method::Symmetric);
        prop_assert!(r.residual <= 1e-8, "residual {}", r.residual);
        let g = factor(&f).unwrap();
        prop_assert!(r.same_lines(&g, 1e-6), "{:?} vs {:?}", r.factors, g.factors);
        // A, B, C are cycled by the even permutations
        for l in &r.factors {
            let moved = cycle_line(l);
            prop_assert!(r.factors.iter().any(|m| m.distance_projective(&moved) < 1e-6));
        }
        if !p.c.is_zero() {
            prop_assert!(cyclic_root_factor(&p).unwrap().same_lines(&r, 1e-6));
        }
    }
}
