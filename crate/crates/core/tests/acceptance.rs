//! Acceptance criteria, one PASS/FAIL line each. Random samples come from a
//! fixed ChaCha seed so every run checks the same inputs.
//!
//! The lines go to stderr directly, so a plain `cargo test` log shows them.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use ternary_cubic::classify::{brill_test, classify, glenn_test, is_completely_reducible, Criterion, Kind};
use ternary_cubic::concomitants::{self, Concomitant};
use ternary_cubic::corpus::{self, Context, IdentityCase};
use ternary_cubic::factor::{
    exact_product, factor, factor_generic, factor_singular, restrict_to_line, two_cubes, Method,
};
use ternary_cubic::forms::point;
use ternary_cubic::numeric::ComplexLine;
use ternary_cubic::quadratics::{square_shortcut, square_test, sum_of_squares};
use ternary_cubic::symmetry::{symmetric_factor, SymmetricParams};
use ternary_cubic::{parse, CubicForm, Engine, Family, LinearForm, Poly, Prefactors, QuadraticForm, Rational};

const SEED: u64 = 0x7e1e_c0de;

// tolerances from the criteria
const RESIDUAL_TOL: f64 = 1e-8;
const TWO_CUBES_TOL: f64 = 1e-9;
const TERM_TABLE_BUDGET: Duration = Duration::from_secs(60);
const FLAGSHIP_BUDGET: Duration = Duration::from_secs(120);
const PRODUCT_SUITE_BUDGET: Duration = Duration::from_secs(300);
const CORPUS_BUDGET: Duration = Duration::from_secs(900);

const EXAMPLE: &str = "x1^3 - 6x1 x2^2 - 6x2^3 + 6x1^2 x3 + 18x1 x2 x3 + 12x2^2 x3 + 4x3^3";

struct Line {
    criterion: u8,
    title: &'static str,
    failures: Vec<String>,
    /// Failures traced to an inconsistency in the source itself.
    known: Vec<String>,
}

impl Line {
    fn new(criterion: u8, title: &'static str) -> Self {
        Line { criterion, title, failures: Vec::new(), known: Vec::new() }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.failures.push(what.into());
        }
    }

    fn known_failure(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.known.push(what.into());
        }
    }

    /// Written to stderr directly so the lines survive libtest's capture.
    fn print(&self, elapsed: Duration) {
        let mark = if self.failures.is_empty() && self.known.is_empty() { "PASS" } else { "FAIL" };
        let mut out = format!("{mark} criterion {}: {} ({:.1} s)\n", self.criterion, self.title, elapsed.as_secs_f64());
        for f in &self.failures {
            out.push_str(&format!("     - {f}\n"));
        }
        for f in &self.known {
            out.push_str(&format!("     - {f} [known source inconsistency]\n"));
        }
        let _ = std::io::stderr().write_all(out.as_bytes());
    }
}

fn cubic(s: &str) -> CubicForm {
    CubicForm::parse(s).unwrap()
}

fn p(s: &str) -> Poly {
    parse(s).unwrap()
}

fn at_u(q: &Poly, u: [i64; 3]) -> Rational {
    q.eval_rational(&point(Family::U, &u.map(Rational::from_int))).unwrap()
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-6..=6), rng.gen_range(1..=3))
}

fn random_line(rng: &mut ChaCha8Rng) -> LinearForm {
    loop {
        let c = [0; 3].map(|_: i32| small_rational(rng));
        if c.iter().any(|v| !v.is_zero()) {
            return LinearForm::new(c);
        }
    }
}

fn combine(a: &LinearForm, b: &LinearForm, s: &Rational, t: &Rational) -> Option<LinearForm> {
    LinearForm::from_poly(&a.to_poly().scale(s).add(&b.to_poly().scale(t))).ok().filter(|l| !l.is_zero())
}

fn contains(lines: &[ComplexLine; 3], l: &LinearForm) -> bool {
    let want = ComplexLine::from_rational(l);
    lines.iter().any(|x| x.distance_projective(&want) < 1e-7)
}

fn run_ids(ids: impl Fn(&IdentityCase) -> bool) -> corpus::Summary {
    let chosen: Vec<&IdentityCase> = corpus::manifest().iter().filter(|c| ids(c)).collect();
    corpus::verify_cases(&chosen, None, &Context::new(Engine::standard()))
}

fn report_failures(line: &mut Line, s: &corpus::Summary) {
    for r in s.reports.iter().filter(|r| !r.passed()) {
        line.check(false, format!("{}: {}", r.id, r.error.clone().unwrap_or_default()));
    }
}

fn criterion_1() -> Line {
    let mut line = Line::new(1, "term counts of the generic concomitants");
    // a fresh engine so the timing covers the computation
    let engine = Engine::new(Prefactors::default());
    let start = Instant::now();
    let want = [73, 84, 82, 448, 25, 103, 576, 1314, 418];
    for (k, n) in Concomitant::ALL.into_iter().zip(want) {
        let got = engine.generic(k).term_count();
        line.check(got == n, format!("{}: {got} terms, want {n}", k.name()));
    }
    line.check(start.elapsed() < TERM_TABLE_BUDGET, format!("took {:?}", start.elapsed()));
    line
}

fn criterion_2() -> Line {
    let mut line = Line::new(2, "tangent-line product identity, 85,119 terms");
    let start = Instant::now();
    let r = corpus::verify(corpus::find("tangent-product").unwrap());
    let elapsed = start.elapsed();
    line.check(r.passed(), format!("outcome {:?}: {}", r.outcome, r.error.unwrap_or_default()));
    line.check(r.lhs_terms == 85_119, format!("{} terms", r.lhs_terms));
    line.check(elapsed < FLAGSHIP_BUDGET, format!("took {elapsed:?}"));
    line
}

fn criterion_3() -> Line {
    let mut line = Line::new(3, "worked examples");

    // x1 (x1 x2 + x3²)
    let f = cubic("x1^2 x2 + x1 x3^2");
    let e = Engine::standard();
    let delta = e.of(Concomitant::Delta, &f);
    line.check(delta == p("-4 x1^3"), format!("Δ = {}", ternary_cubic::render(&delta)));
    for k in [Concomitant::S, Concomitant::T, Concomitant::TUuu] {
        line.check(e.of(k, &f).is_zero(), format!("{} ≠ 0", k.name()));
    }
    let dd = ternary_cubic::calculus::transvectant(2, &delta, &delta, &ternary_cubic::calculus::ux().pow(2)).unwrap();
    line.check(dd.is_zero(), "J2[Δ, Δ, u²] ≠ 0");
    line.check(classify(&f).kind == Kind::NotCompletelyReducible, "not classified as irreducible");

    // 2 x1 (x1² + 6 x2²)
    let f = cubic("2x1^3 + 12x1 x2^2");
    line.check(concomitants::f6u(&f) == p("-13824 u3^6"), "F ≠ -13824 u3^6");
    let theta = concomitants::theta(&f);
    line.known_failure(
        theta == p("1152 u3^2 (x1^2 - 2 x2^2)"),
        format!("θ = {} rather than the printed 1152 u3^2 (x1^2 - 2 x2^2)", ternary_cubic::render(&theta)),
    );
    match two_cubes(&f) {
        Ok(t) => {
            let r2 = 2f64.sqrt();
            let plus = ComplexLine::real([1.0, r2, 0.0]);
            let minus = ComplexLine::real([1.0, -r2, 0.0]);
            let hits = |l: &ComplexLine| l.distance_projective(&plus) < TWO_CUBES_TOL || l.distance_projective(&minus) < TWO_CUBES_TOL;
            line.check(hits(&t.a) && hits(&t.b), format!("two cubes gave {:?} and {:?}", t.a, t.b));
            line.check(t.residual <= TWO_CUBES_TOL, format!("two cubes residual {}", t.residual));
        }
        Err(err) => line.check(false, format!("two cubes: {err}")),
    }

    // the factoring example
    let f = cubic(EXAMPLE);
    let c = classify(&f);
    line.check(c.kind == Kind::CompletelyReducibleGeneric, format!("kind {:?}", c.kind));
    line.check(c.witnesses.lambda == Some(Rational::from_int(-108)), format!("λ = {:?}", c.witnesses.lambda));
    let big_f = concomitants::f6u(&f);
    line.check(at_u(&big_f, [0, 0, 1]) == Rational::from_int(-108), "F(0,0,1) ≠ -108");
    line.check(at_u(&big_f, [1, 1, 0]) == Rational::from_int(-432), "F(1,1,0) ≠ -432");
    let pt = |c: [i64; 3]| c.map(Rational::from_int);
    let b = restrict_to_line(&f, &pt([1, 0, 0]), &pt([0, 1, 0]));
    line.check(b.0 == [1, 0, -6, -6].map(Rational::from_int), "restriction to y = e1, z = e2");
    let b = restrict_to_line(&f, &pt([-1, 1, 0]), &pt([0, 0, 1]));
    line.check(b.0 == [-1, 0, 0, 4].map(Rational::from_int), "restriction to y = (-1,1,0), z = e3");
    match factor_generic(&f) {
        Ok(r) => line.check(r.residual <= RESIDUAL_TOL, format!("residual {}", r.residual)),
        Err(err) => line.check(false, format!("factor_generic: {err}")),
    }

    // x3³ + x3 x1² + x2³
    let f = cubic("x3^3 + x1^2 x3 + x2^3");
    match brill_test(&f) {
        Some(r) => {
            line.check(!r.five, "Brill test passed");
            line.check(r.g.coeff(&[2, 3, 3]) == Rational::from_int(-36), format!("g233 = {}", r.g.coeff(&[2, 3, 3])));
        }
        None => line.check(false, "Brill test not applicable"),
    }
    line
}

fn criterion_4() -> Line {
    let mut line = Line::new(4, "symbolic product laws");
    let start = Instant::now();
    let s = run_ids(|c| c.id.starts_with("product-"));
    let elapsed = start.elapsed();
    line.check(s.total == 16, format!("{} product cases", s.total));
    report_failures(&mut line, &s);
    line.check(elapsed < PRODUCT_SUITE_BUDGET, format!("took {elapsed:?}"));
    line
}

fn criterion_5() -> Line {
    let mut line = Line::new(5, "round-trip factorization of 500 line triples");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut done = 0;
    let mut compared = 0;
    while done < 500 {
        let a = random_line(&mut rng);
        let b = random_line(&mut rng);
        let kind = done % 4;
        let triple = match kind {
            0 => [a, b, random_line(&mut rng)],
            1 => {
                let (s, t) = (small_rational(&mut rng), small_rational(&mut rng));
                let Some(c) = combine(&a, &b, &s, &t) else { continue };
                [a, b, c]
            }
            2 => {
                let s = small_rational(&mut rng);
                let Some(c) = combine(&a, &a, &s, &Rational::ZERO) else { continue };
                [a, c, b]
            }
            _ => {
                if rng.gen_bool(0.5) {
                    [a.clone(), a, b]
                } else {
                    [a.clone(), a.clone(), a]
                }
            }
        };
        let f = exact_product(&triple);
        if f.is_zero() {
            continue;
        }
        done += 1;
        match factor(&f) {
            Ok(r) => {
                line.check(r.residual <= RESIDUAL_TOL, format!("{f}: residual {}", r.residual));
                for l in &triple {
                    line.check(contains(&r.factors, l), format!("{f}: {l} missing"));
                }
                // both paths apply to concurrent, pairwise independent lines
                if kind == 1 && !concomitants::f6u(&f).is_zero() {
                    compared += 1;
                    match (factor_generic(&f), factor_singular(&f)) {
                        (Ok(g), Ok(s)) => line.check(g.same_lines(&s, RESIDUAL_TOL), format!("{f}: generic and singular differ")),
                        (g, s) => line.check(false, format!("{f}: {:?} / {:?}", g.err(), s.err())),
                    }
                }
            }
            Err(err) => line.check(false, format!("{f}: {err}")),
        }
    }
    line.check(compared > 50, format!("only {compared} generic/singular comparisons"));
    line
}

fn criterion_6() -> Line {
    let mut line = Line::new(6, "criterion concordance on 500 cubics");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let ungated = [
        Criterion::Gamma,
        Criterion::Pi,
        Criterion::HessianProportional,
        Criterion::DeltaSqMinusSF,
        Criterion::FDeltaMinusSuuuSqF,
    ];
    for n in 0..500 {
        let f = if n % 2 == 0 {
            let l = |rng: &mut ChaCha8Rng| LinearForm::from_ints([0; 3].map(|_: i32| rng.gen_range(-4..=4)));
            exact_product(&[l(&mut rng), l(&mut rng), l(&mut rng)])
        } else {
            CubicForm::from_ints([0; 10].map(|_: i32| rng.gen_range(-5..=5)))
        };
        let gamma = match is_completely_reducible(&f, Criterion::Gamma) {
            Ok(v) => v,
            Err(err) => {
                line.check(false, format!("{f}: {err}"));
                continue;
            }
        };
        for c in ungated {
            line.check(is_completely_reducible(&f, c) == Ok(gamma), format!("{f}: {c} disagrees"));
        }
        for c in Criterion::ALL.into_iter().filter(|c| c.needs_nonzero_s()) {
            if let Ok(v) = is_completely_reducible(&f, c) {
                line.check(v == gamma, format!("{f}: {c} disagrees"));
            }
        }
        if let Some(g) = glenn_test(&f) {
            line.check(g == gamma, format!("{f}: Glenn test disagrees"));
        }
        if let Some(b) = brill_test(&f) {
            line.check(b.five == gamma, format!("{f}: Brill test disagrees"));
            if let Some(s) = b.shortcut {
                line.check(s == gamma, format!("{f}: Brill shortcut disagrees"));
            }
        }
    }
    line
}

fn criterion_7() -> Line {
    let mut line = Line::new(7, "identity corpus, tier 1, plus mutation smoke test");
    let start = Instant::now();
    let s = corpus::verify_all(Some(1));
    let elapsed = start.elapsed();
    line.check(s.total > 0 && s.success(), format!("{} of {} passed", s.passed, s.total));
    report_failures(&mut line, &s);
    line.check(elapsed < CORPUS_BUDGET, format!("took {elapsed:?}"));
    let mutated = Engine::new(Prefactors { delta: Rational::new(1, 13), ..Prefactors::default() });
    let m = corpus::verify_all_with(Some(1), &Context::new(&mutated));
    line.check(m.failed > 0, "perturbed Δ prefactor went unnoticed");
    line
}

fn criterion_8() -> Line {
    let mut line = Line::new(8, "quadratics on 500 random inputs");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    for n in 0..500 {
        // every fifth input is built as a square, so the test sees both answers
        let q = if n % 5 == 0 {
            let l = random_line(&mut rng).to_poly();
            QuadraticForm::from_poly(&l.pow(2).scale(&small_rational(&mut rng))).unwrap()
        } else {
            QuadraticForm::new([0; 6].map(|_: i32| small_rational(&mut rng)))
        };
        let d = sum_of_squares(&q);
        line.check(d.recombine() == q.to_poly(), format!("{q}: squares do not recombine"));
        if let Some(s) = square_shortcut(&q) {
            line.check(s == square_test(&q).is_zero(), format!("{q}: shortcut disagrees"));
        }
    }
    line
}

fn criterion_9() -> Line {
    let mut line = Line::new(9, "forms unchanged by even permutations, 200 constrained tuples");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut done = 0;
    while done < 200 {
        let (a, b, d) = (small_rational(&mut rng), small_rational(&mut rng), small_rational(&mut rng));
        let k = &(&Rational::from_int(27) * &(&a * &a)) + &(&b * &b);
        if k.is_zero() {
            continue;
        }
        let c = -(&d.pow(3) / &k);
        let params = SymmetricParams::new(a, b, c, d);
        let f = params.recombine();
        if f.is_zero() {
            continue;
        }
        done += 1;
        match (symmetric_factor(&params), factor(&f)) {
            (Ok(r), Ok(g)) => {
                line.check(r.method == Method::Symmetric, "wrong method");
                line.check(r.residual <= RESIDUAL_TOL, format!("{f}: residual {}", r.residual));
                line.check(r.same_lines(&g, RESIDUAL_TOL), format!("{f}: lines differ from {:?}", g.method));
            }
            (r, g) => line.check(false, format!("{f}: {:?} / {:?}", r.err(), g.err())),
        }
    }
    let s = run_ids(|c| c.id == "symmetric-hessian" || c.id == "symmetric-f6u-sum-line");
    line.check(s.total == 2, "symbolic displays missing from the corpus");
    report_failures(&mut line, &s);
    line
}

#[test]
fn acceptance() {
    let criteria: [fn() -> Line; 9] = [
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8,
        criterion_9,
    ];
    let mut lines = Vec::new();
    for run in criteria {
        let start = Instant::now();
        let line = run();
        line.print(start.elapsed());
        lines.push(line);
    }
    let unexpected: Vec<String> = lines
        .iter()
        .flat_map(|l| l.failures.iter().map(move |f| format!("criterion {}: {f}", l.criterion)))
        .collect();
    assert!(unexpected.is_empty(), "{unexpected:#?}");
    // the only tolerated failure is the printed θ of the two-cubes example
    let known: Vec<(u8, usize)> = lines.iter().filter(|l| !l.known.is_empty()).map(|l| (l.criterion, l.known.len())).collect();
    assert_eq!(known, [(3, 1)]);
}
