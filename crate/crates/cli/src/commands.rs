use std::fmt::Write as _;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use ternary_cubic::classify::{self, Criterion, Kind};
use ternary_cubic::corpus::{self, Context};
use ternary_cubic::factor::{self, FactorOptions, Factorization};
use ternary_cubic::numeric::ComplexLine;
use ternary_cubic::quadratics;
use ternary_cubic::symmetry;
use ternary_cubic::{Concomitant, CubicForm, Engine, Error, LinearForm, Prefactors, QuadraticForm, Rational};

use crate::report::{Emit, Format, INTERNAL, NEGATIVE, OK};

/// Inline text, or the contents of the file named after `@`.
fn read_form(command: &'static str, arg: &str) -> Result<(Value, String), Emit> {
    match arg.strip_prefix('@') {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => {
                let text = text.trim().to_string();
                Ok((json!({ "form": text, "file": path }), text))
            }
            Err(e) => Err(Emit::usage(
                command,
                json!({ "file": path }),
                "UnreadableInput",
                format!("cannot read {path}: {e}"),
            )),
        },
        None => Ok((json!({ "form": arg }), arg.to_string())),
    }
}

macro_rules! try_emit {
    ($cmd:expr, $input:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(err) => return Emit::error($cmd, $input, &err),
        }
    };
}

macro_rules! input_of {
    ($cmd:expr, $arg:expr) => {
        match read_form($cmd, $arg) {
            Ok(v) => v,
            Err(emit) => return emit,
        }
    };
}

fn complex(c: Complex64) -> Value {
    json!({ "re": c.re, "im": c.im })
}

fn line(l: &ComplexLine) -> Value {
    Value::Array(l.0.iter().copied().map(complex).collect())
}

fn rational(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn point(p: &[Rational; 3]) -> Value {
    Value::Array(p.iter().map(rational).collect())
}

fn factorization(fz: &Factorization) -> Value {
    let mut m = Map::new();
    m.insert("method".into(), json!(fz.method));
    m.insert("scalar".into(), complex(fz.scalar));
    m.insert("factors".into(), Value::Array(fz.factors.iter().map(line).collect()));
    m.insert("residual".into(), json!(fz.residual));
    m.insert("u".into(), json!(fz.u));
    m.insert(
        "exact".into(),
        match &fz.exact {
            Some(e) => json!({
                "scalar": rational(&e.scalar),
                "factors": e.factors.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            }),
            None => Value::Null,
        },
    );
    Value::Object(m)
}

fn factorization_text(fz: &Factorization) -> String {
    let mut out = String::new();
    match &fz.exact {
        Some(e) => {
            let _ = writeln!(out, "scalar: {}", e.scalar);
            for l in &e.factors {
                let _ = writeln!(out, "  ({l})");
            }
        }
        None => {
            let _ = writeln!(out, "scalar: {}", fmt_c(fz.scalar));
            for l in &fz.factors {
                let _ = writeln!(out, "  ({l})");
            }
        }
    }
    let _ = writeln!(out, "method: {:?}  residual: {:.3e}", fz.method, fz.residual);
    out
}

fn fmt_c(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else {
        format!("{}{:+}i", c.re, c.im)
    }
}

pub fn concomitant(arg: &str, kinds: &[Concomitant], verify: bool) -> Emit {
    const CMD: &str = "concomitant";
    let (input, text) = input_of!(CMD, arg);
    let f = try_emit!(CMD, input, CubicForm::parse(&text));
    let mut kinds = if kinds.is_empty() { Concomitant::ALL.to_vec() } else { kinds.to_vec() };
    kinds.sort();
    kinds.dedup();
    let engine = Engine::standard();
    let mut values = Map::new();
    let mut out = String::new();
    for &k in &kinds {
        if verify {
            if let Err(e) = engine.cross_check(k) {
                let mut emit = Emit::error(CMD, input, &e);
                emit.status = INTERNAL;
                return emit;
            }
        }
        let v = engine.of(k, &f).to_string();
        let _ = writeln!(out, "{} = {v}", k.name());
        values.insert(k.name().to_string(), Value::String(v));
    }
    let result = json!({ "values": values, "verified": verify });
    Emit::ok(CMD, input, result, out, OK)
}

fn kind_name(k: Kind) -> Value {
    json!(k)
}

pub fn classify(arg: &str, criterion: Option<Criterion>) -> Emit {
    const CMD: &str = "classify";
    let (mut input, text) = input_of!(CMD, arg);
    let f = try_emit!(CMD, input, CubicForm::parse(&text));
    if let Some(c) = criterion {
        input["criterion"] = json!(c.name());
        let holds = try_emit!(CMD, input, classify::is_completely_reducible(&f, c));
        let result = json!({
            "criterion": c.name(),
            "expression": c.expression(),
            "completely_reducible": holds,
        });
        let out = format!(
            "criterion {} ({}): {}\n",
            c.name(),
            c.expression(),
            if holds { "completely reducible" } else { "not completely reducible" }
        );
        return Emit::ok(CMD, input, result, out, if holds { OK } else { NEGATIVE });
    }
    let c = classify::classify(&f);
    let w = &c.witnesses;
    let mut witnesses = Map::new();
    let mut out = format!("{:?}\n", c.kind);
    if let Some((s, l)) = &w.cube_root {
        witnesses.insert("cube_root".into(), json!({ "scalar": rational(s), "line": l.to_string() }));
        let _ = writeln!(out, "  f = {s} ({l})^3");
    }
    if let Some(z) = &w.apex {
        witnesses.insert("apex".into(), point(z));
        let _ = writeln!(out, "  apex: ({}, {}, {})", z[0], z[1], z[2]);
    }
    if let Some(l) = &w.lambda {
        witnesses.insert("lambda".into(), rational(l));
        let _ = writeln!(out, "  Delta = {l} f");
    }
    for (name, vanished) in &c.criteria_fired {
        let _ = writeln!(out, "  {name}: {}", if *vanished { "vanishes" } else { "nonzero" });
    }
    let fired: Vec<Value> = c
        .criteria_fired
        .iter()
        .map(|(n, v)| json!({ "test": n, "vanishes": v }))
        .collect();
    let result = json!({
        "kind": kind_name(c.kind),
        "completely_reducible": c.kind.is_completely_reducible(),
        "witnesses": witnesses,
        "criteria": fired,
    });
    let status = if c.kind.is_completely_reducible() { OK } else { NEGATIVE };
    Emit::ok(CMD, input, result, out, status)
}

pub fn factor(arg: &str, tolerance: Option<f64>) -> Emit {
    const CMD: &str = "factor";
    let (mut input, text) = input_of!(CMD, arg);
    let mut opts = FactorOptions::default();
    if let Some(t) = tolerance {
        input["tolerance"] = json!(t);
        opts.tolerance = t;
    }
    let f = try_emit!(CMD, input, CubicForm::parse(&text));
    let fz = try_emit!(CMD, input, factor::factor_with(&f, &opts));
    Emit::ok(CMD, input, factorization(&fz), factorization_text(&fz), OK)
}

pub fn quad(arg: &str) -> Emit {
    const CMD: &str = "quad";
    let (input, text) = input_of!(CMD, arg);
    let q = try_emit!(CMD, input, QuadraticForm::parse(&text));
    let disc = quadratics::quad_discriminant(&q);
    let squares = quadratics::sum_of_squares(&q);
    let test = quadratics::square_test(&q);
    let is_square = test.is_zero() && !q.is_zero();
    let mut out = format!("discriminant: {disc}\nsquare test: {test}\n");
    let terms: Vec<Value> = squares
        .terms
        .iter()
        .map(|(c, l)| json!({ "coefficient": rational(c), "line": l.to_string() }))
        .collect();
    let written: Vec<String> = squares.terms.iter().map(|(c, l)| format!("{c} ({l})^2")).collect();
    let _ = writeln!(out, "squares: {}", if written.is_empty() { "0".into() } else { written.join(" + ") });
    let factors = match quadratics::factor_quadratic(&q) {
        Ok(qf) => {
            let exact = qf.exact.as_ref().map(|(s, a, b)| {
                let _ = writeln!(out, "factors: {s} ({a}) ({b})");
                json!({ "scalar": rational(s), "factors": [a.to_string(), b.to_string()] })
            });
            if exact.is_none() {
                let _ = writeln!(out, "factors: {} ({}) ({})", fmt_c(qf.scalar), qf.factors[0], qf.factors[1]);
            }
            json!({
                "scalar": complex(qf.scalar),
                "factors": qf.factors.iter().map(line).collect::<Vec<_>>(),
                "exact": exact,
                "residual": qf.residual,
            })
        }
        Err(Error::Irreducible) | Err(Error::ZeroForm) => {
            out.push_str("factors: none\n");
            Value::Null
        }
        Err(e) => return Emit::error(CMD, input, &e),
    };
    let result = json!({
        "discriminant": rational(&disc),
        "square_test": test.to_string(),
        "is_square": is_square,
        "squares": terms,
        "factors": factors,
    });
    Emit::ok(CMD, input, result, out, OK)
}

pub fn symmetric(arg: &str) -> Emit {
    const CMD: &str = "symmetric";
    let (input, text) = input_of!(CMD, arg);
    let f = try_emit!(CMD, input, CubicForm::parse(&text));
    let Some(p) = symmetry::symmetric_decompose(&f) else {
        let result = json!({ "cyclic": false });
        return Emit::ok(CMD, input, result, "not invariant under cyclic permutations\n".into(), NEGATIVE);
    };
    let reducible = symmetry::symmetric_reducible(&p);
    let mut out = format!(
        "a = {}, b = {}, c = {}, d = {}\n(27a^2 + b^2) c + d^3 = {}\n",
        p.a,
        p.b,
        p.c,
        p.d,
        p.constraint()
    );
    let factors = if reducible {
        let fz = try_emit!(CMD, input, symmetry::symmetric_factor(&p));
        out.push_str(&factorization_text(&fz));
        factorization(&fz)
    } else {
        out.push_str("not completely reducible\n");
        Value::Null
    };
    let result = json!({
        "cyclic": true,
        "params": { "a": rational(&p.a), "b": rational(&p.b), "c": rational(&p.c), "d": rational(&p.d) },
        "constraint": rational(&p.constraint()),
        "completely_reducible": reducible,
        "factorization": factors,
    });
    Emit::ok(CMD, input, result, out, OK)
}

pub fn verify_identities(tier: Option<u8>, ids: &[String], format: Format) -> Emit {
    const CMD: &str = "verify-identities";
    let input = json!({ "tier": tier, "ids": ids });
    let ctx = Context::new(Engine::standard());
    let summary = if ids.is_empty() {
        corpus::verify_all_with(tier, &ctx)
    } else {
        let mut chosen = Vec::new();
        for id in ids {
            match corpus::find(id) {
                Some(c) if tier.is_none_or(|t| c.tier == t) => chosen.push(c),
                Some(_) => {}
                None => return Emit::error(CMD, input, &Error::BuilderFailure(id.clone())),
            }
        }
        corpus::verify_cases(&chosen, tier, &ctx)
    };
    let status = if summary.success() { OK } else { INTERNAL };
    let result = serde_json::to_value(&summary).expect("summary serializes");
    let mut emit = Emit::ok(CMD, input, result, summary.human(), status);
    if format == Format::JsonLines {
        emit.lines = Some(summary.json_lines());
    }
    emit
}

fn random_line(rng: &mut ChaCha8Rng) -> LinearForm {
    loop {
        let c = [0; 3].map(|_| rng.gen_range(-5..=5i64));
        if c != [0, 0, 0] {
            return LinearForm::from_ints(c);
        }
    }
}

pub fn bench(seed: u64, samples: usize) -> Emit {
    const CMD: &str = "bench";
    let input = json!({ "seed": seed, "samples": samples });
    let mut timings = Map::new();
    let mut out = String::new();
    let mut record = |name: &str, secs: f64, detail: Value| {
        let _ = writeln!(out, "{name:<28} {secs:>9.3} s  {detail}");
        timings.insert(name.to_string(), json!({ "seconds": secs, "detail": detail }));
    };

    let start = Instant::now();
    let engine = Engine::new(Prefactors::default());
    let terms: usize = Concomitant::ALL.iter().map(|&k| engine.generic(k).term_count()).sum();
    record("generic-concomitants", start.elapsed().as_secs_f64(), json!({ "terms": terms }));

    let ctx = Context::new(&engine);
    let start = Instant::now();
    let big = corpus::find("tangent-product").map(|c| corpus::verify_with(c, &ctx));
    let passed = big.as_ref().is_some_and(|r| r.passed());
    record("tangent-product", start.elapsed().as_secs_f64(), json!({ "passed": passed }));

    let start = Instant::now();
    let summary = corpus::verify_all_with(None, &ctx);
    record(
        "corpus",
        start.elapsed().as_secs_f64(),
        json!({ "passed": summary.passed, "total": summary.total }),
    );

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[LinearForm; 3]> = (0..samples)
        .map(|_| [random_line(&mut rng), random_line(&mut rng), random_line(&mut rng)])
        .collect();
    let start = Instant::now();
    let mut bad = 0usize;
    for t in &triples {
        let f = factor::exact_product(t);
        match factor::factor(&f) {
            Ok(fz) if fz.residual <= factor::FactorOptions::default().tolerance => {}
            _ => bad += 1,
        }
    }
    record(
        "factor-round-trips",
        start.elapsed().as_secs_f64(),
        json!({ "samples": samples, "failures": bad }),
    );

    let start = Instant::now();
    let mut mismatched = 0usize;
    for _ in 0..samples {
        let f = CubicForm::from_ints([0; 10].map(|_| rng.gen_range(-3..=3i64)));
        let reducible = classify::classify(&f).kind.is_completely_reducible();
        if !f.is_zero() && reducible != factor::factor(&f).is_ok() {
            mismatched += 1;
        }
    }
    record(
        "classify-vs-factor",
        start.elapsed().as_secs_f64(),
        json!({ "samples": samples, "mismatches": mismatched }),
    );

    let healthy = passed && summary.success() && bad == 0 && mismatched == 0;
    let result = json!({ "timings": timings, "healthy": healthy });
    Emit::ok(CMD, input, result, out, if healthy { OK } else { INTERNAL })
}
