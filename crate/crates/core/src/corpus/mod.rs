//! The identity corpus: every displayed identity, verified by expanding both
//! sides over generic symbols and comparing canonical forms.
//!
//! Cases are listed in `manifest.json` (id, tier, frozen term counts, a
//! formula anchor and notes). The recipes live in a registry keyed by id;
//! every recipe takes a [`Context`] so the same recipes can be replayed
//! against a perturbed [`Engine`].

mod cases;

use std::sync::OnceLock;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::concomitants::{Concomitant, Engine};
use crate::error::{Error, Result};
use crate::poly::Poly;

pub use cases::registered_ids;

const MANIFEST: &str = include_str!("manifest.json");

/// One manifest record.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct IdentityCase {
    pub id: String,
    pub tier: u8,
    /// Term count of the common expansion, when frozen.
    pub expected_terms: Option<usize>,
    /// Whether `expected_terms` was recorded from a green run rather than
    /// taken from the source.
    #[serde(default)]
    pub derived: bool,
    /// The identity, written out.
    pub anchor: String,
    #[serde(default)]
    pub note: String,
    /// Per-case wall-time budget in milliseconds.
    pub budget_ms: u64,
}

/// All manifest records, sorted by id.
pub fn manifest() -> &'static [IdentityCase] {
    static CASES: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    CASES.get_or_init(|| {
        let mut v: Vec<IdentityCase> = serde_json::from_str(MANIFEST).expect("corpus manifest parses");
        v.sort_by(|a, b| a.id.cmp(&b.id));
        v
    })
}

pub fn find(id: &str) -> Option<&'static IdentityCase> {
    manifest().iter().find(|c| c.id == id)
}

/// Shared state for one corpus run: the engine plus values several recipes
/// reuse.
pub struct Context<'a> {
    pub engine: &'a Engine,
    products: [OnceLock<Result<Poly>>; 9],
    tangent: OnceLock<cases::TangentParts>,
}

impl<'a> Context<'a> {
    pub fn new(engine: &'a Engine) -> Self {
        Context {
            engine,
            products: Default::default(),
            tangent: OnceLock::new(),
        }
    }

    /// Concomitant `k` of the symbolic product `a_x b_x c_x`.
    pub(crate) fn product(&self, k: Concomitant) -> Result<Poly> {
        let i = Concomitant::ALL.iter().position(|&c| c == k).expect("listed");
        self.products[i]
            .get_or_init(|| self.engine.evaluate(k, &cases::symbolic_product()))
            .clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    /// Sides differ, or the frozen term count does not match.
    Fail,
    /// The recipe itself failed.
    Error,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct CaseReport {
    pub id: String,
    pub tier: u8,
    pub outcome: Outcome,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// Terms of `lhs − rhs`; zero exactly when the identity holds.
    pub difference_terms: usize,
    pub expected_terms: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Wall time; left out of deterministic output.
    #[serde(skip)]
    pub elapsed_ms: f64,
    #[serde(skip)]
    pub budget_ms: u64,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn over_budget(&self) -> bool {
        self.elapsed_ms > self.budget_ms as f64
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Summary {
    pub tier: Option<u8>,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub reports: Vec<CaseReport>,
    #[serde(skip)]
    pub elapsed_ms: f64,
}

impl Summary {
    pub fn success(&self) -> bool {
        self.failed == 0
    }

    /// One JSON object per line, sorted by id.
    pub fn json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&serde_json::to_string(r).expect("report serializes"));
            out.push('\n');
        }
        out
    }

    /// Human-readable summary with timings.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            let mark = match r.outcome {
                Outcome::Pass => "ok  ",
                Outcome::Fail => "FAIL",
                Outcome::Error => "ERR ",
            };
            let budget = if r.over_budget() { "  (over budget)" } else { "" };
            out.push_str(&format!(
                "{mark} {:<40} tier {}  {:>7} terms  {:>10.1} ms{budget}\n",
                r.id, r.tier, r.lhs_terms, r.elapsed_ms
            ));
            if let Some(e) = &r.error {
                out.push_str(&format!("     {e}\n"));
            }
        }
        out.push_str(&format!(
            "{} of {} passed, {} failed, {:.1} s\n",
            self.passed,
            self.total,
            self.failed,
            self.elapsed_ms / 1000.0
        ));
        out
    }
}

fn run(case: &IdentityCase, ctx: &Context) -> CaseReport {
    let start = Instant::now();
    let built = match cases::builder(&case.id) {
        Some(b) => b(ctx),
        None => Err(Error::BuilderFailure(case.id.clone())),
    };
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let mut report = CaseReport {
        id: case.id.clone(),
        tier: case.tier,
        outcome: Outcome::Error,
        lhs_terms: 0,
        rhs_terms: 0,
        difference_terms: 0,
        expected_terms: case.expected_terms,
        error: None,
        elapsed_ms,
        budget_ms: case.budget_ms,
    };
    match built {
        Err(e) => report.error = Some(format!("{}: {e}", e.code())),
        Ok((lhs, rhs)) => {
            report.lhs_terms = lhs.term_count();
            report.rhs_terms = rhs.term_count();
            report.difference_terms = lhs.sub(&rhs).term_count();
            let count_ok = case.expected_terms.is_none_or(|n| n == report.lhs_terms);
            report.outcome = if report.difference_terms == 0 && count_ok {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
            if report.difference_terms != 0 {
                report.error = Some(format!("sides differ in {} terms", report.difference_terms));
            } else if !count_ok {
                report.error = Some(format!(
                    "expected {} terms, expansion has {}",
                    case.expected_terms.unwrap_or_default(),
                    report.lhs_terms
                ));
            }
        }
    }
    report
}

/// Verifies one case with the standard engine.
pub fn verify(case: &IdentityCase) -> CaseReport {
    run(case, &Context::new(Engine::standard()))
}

/// Verifies one case with the given context.
pub fn verify_with(case: &IdentityCase, ctx: &Context) -> CaseReport {
    run(case, ctx)
}

/// Runs every case of the tier (or all cases), in parallel, with the
/// standard engine.
pub fn verify_all(tier: Option<u8>) -> Summary {
    verify_all_with(tier, &Context::new(Engine::standard()))
}

pub fn verify_all_with(tier: Option<u8>, ctx: &Context) -> Summary {
    let chosen: Vec<&IdentityCase> = manifest()
        .iter()
        .filter(|c| tier.is_none_or(|t| c.tier == t))
        .collect();
    verify_cases(&chosen, tier, ctx)
}

/// Runs the listed cases; reports come back sorted by id.
pub fn verify_cases(cases: &[&IdentityCase], tier: Option<u8>, ctx: &Context) -> Summary {
    let start = Instant::now();
    let mut reports: Vec<CaseReport> = cases.par_iter().map(|c| run(c, ctx)).collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = reports.iter().filter(|r| r.passed()).count();
    Summary {
        tier,
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
        reports,
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}
