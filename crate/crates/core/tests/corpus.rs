use std::collections::BTreeSet;

use ternary_cubic::corpus::{self, Context, IdentityCase, Outcome};
use ternary_cubic::{Engine, Prefactors, Rational};

#[test]
fn manifest_and_registry_list_the_same_ids() {
    let listed: BTreeSet<String> = corpus::manifest().iter().map(|c| c.id.clone()).collect();
    let registered: BTreeSet<String> = corpus::registered_ids().into_iter().collect();
    assert_eq!(listed, registered);
    assert_eq!(listed.len(), corpus::manifest().len(), "duplicate ids");
}

#[test]
fn manifest_records_are_well_formed() {
    for c in corpus::manifest() {
        assert!(c.tier == 1 || c.tier == 2, "{}", c.id);
        assert!(!c.anchor.is_empty(), "{}", c.id);
        assert!(c.budget_ms > 0, "{}", c.id);
        assert!(c.expected_terms.is_some(), "{} has no frozen count", c.id);
    }
    // the only count taken from the source rather than a green run
    let stated: Vec<&str> = corpus::manifest()
        .iter()
        .filter(|c| !c.derived)
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(stated, ["tangent-product"]);
}

#[test]
fn every_case_passes() {
    let summary = corpus::verify_all(None);
    let failed: Vec<_> = summary.reports.iter().filter(|r| !r.passed()).collect();
    assert!(failed.is_empty(), "{}", summary.human());
    assert!(summary.reports.windows(2).all(|w| w[0].id < w[1].id));
}

#[test]
fn tangent_product_has_the_stated_size() {
    let case = corpus::find("tangent-product").unwrap();
    let r = corpus::verify(case);
    assert_eq!(r.outcome, Outcome::Pass);
    assert_eq!(r.lhs_terms, 85_119);
    assert_eq!(r.rhs_terms, 85_119);
}

#[test]
fn perturbed_hessian_prefactor_is_caught() {
    let engine = Engine::new(Prefactors {
        delta: Rational::new(1, 13),
        ..Prefactors::default()
    });
    let ctx = Context::new(&engine);
    let summary = corpus::verify_all_with(Some(1), &ctx);
    assert!(summary.failed > 0);
    let outcome = |id: &str| {
        summary.reports.iter().find(|r| r.id == id).unwrap().outcome
    };
    // Δ feeds these
    assert_eq!(outcome("product-delta"), Outcome::Fail);
    assert_eq!(outcome("alternative-delta-1"), Outcome::Fail);
    // and not these
    for id in ["euler-cubic", "polar-xyz", "basis-cubic", "alternative-theta-1", "product-s"] {
        assert_eq!(outcome(id), Outcome::Pass, "{id}");
    }
}

#[test]
fn empty_selection_succeeds() {
    let none: Vec<&IdentityCase> = Vec::new();
    let s = corpus::verify_cases(&none, Some(9), &Context::new(Engine::standard()));
    assert_eq!(s.total, 0);
    assert!(s.success());
    assert_eq!(s.json_lines(), "");
}

#[test]
fn json_lines_are_deterministic() {
    let chosen: Vec<&IdentityCase> = corpus::manifest().iter().filter(|c| c.id.starts_with("polar-")).collect();
    let ctx = Context::new(Engine::standard());
    let a = corpus::verify_cases(&chosen, None, &ctx).json_lines();
    let b = corpus::verify_cases(&chosen, None, &ctx).json_lines();
    assert_eq!(a, b);
    assert!(!a.contains("elapsed"));
}

#[test]
fn unknown_case_reports_builder_failure() {
    let case = IdentityCase {
        id: "no-such-identity".into(),
        tier: 1,
        expected_terms: None,
        derived: false,
        anchor: "-".into(),
        note: String::new(),
        budget_ms: 1,
    };
    let r = corpus::verify(&case);
    assert_eq!(r.outcome, Outcome::Error);
    assert!(r.error.unwrap().starts_with("BuilderFailure"));
}
