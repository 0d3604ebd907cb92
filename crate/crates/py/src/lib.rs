//! Python bindings. Forms go in as text in the polynomial grammar;
//! polynomials come back as text, rationals as `"n/d"` strings and
//! floating factor coefficients as Python complex numbers.

use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;
use ternary_cubic::classify::{self as hierarchy, Criterion};
use ternary_cubic::corpus;
use ternary_cubic::factor::{factor_with, FactorOptions, Factorization};
use ternary_cubic::quadratics;
use ternary_cubic::symmetry;
use ternary_cubic::{Concomitant, CubicForm, Engine, Error, QuadraticForm};

create_exception!(ternary_cubic, CubicError, PyValueError, "Library error; args are (code, message).");

fn raise(e: Error) -> PyErr {
    CubicError::new_err((e.code(), e.to_string()))
}

fn cubic(text: &str) -> PyResult<CubicForm> {
    CubicForm::parse(text).map_err(raise)
}

fn lines(fz: &Factorization) -> Vec<Vec<Complex64>> {
    fz.factors.iter().map(|l| l.0.to_vec()).collect()
}

fn factorization<'py>(py: Python<'py>, fz: &Factorization) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("method", format!("{:?}", fz.method))?;
    d.set_item("scalar", fz.scalar)?;
    d.set_item("factors", lines(fz))?;
    d.set_item("residual", fz.residual)?;
    d.set_item("u", fz.u.map(|u| u.to_vec()))?;
    match &fz.exact {
        Some(e) => {
            let ex = PyDict::new(py);
            ex.set_item("scalar", e.scalar.to_string())?;
            ex.set_item("factors", e.factors.iter().map(|l| l.to_string()).collect::<Vec<_>>())?;
            d.set_item("exact", ex)?;
        }
        None => d.set_item("exact", py.None())?,
    }
    Ok(d)
}

/// Concomitant `kind` (e.g. "Delta", "theta", "S", "F") of a cubic, as text.
#[pyfunction]
fn concomitant(form: &str, kind: &str) -> PyResult<String> {
    let k: Concomitant = kind.parse().map_err(raise)?;
    Ok(Engine::standard().of(k, &cubic(form)?).to_string())
}

/// All nine concomitants keyed by name. With `verify`, the alternative
/// formulas are checked on the generic cubic first.
#[pyfunction]
#[pyo3(signature = (form, verify = false))]
fn concomitants<'py>(py: Python<'py>, form: &str, verify: bool) -> PyResult<Bound<'py, PyDict>> {
    let f = cubic(form)?;
    let engine = Engine::standard();
    let d = PyDict::new(py);
    for k in Concomitant::ALL {
        if verify {
            engine.cross_check(k).map_err(raise)?;
        }
        d.set_item(k.name(), engine.of(k, &f).to_string())?;
    }
    Ok(d)
}

/// Classification with witnesses, or a single criterion's verdict.
#[pyfunction]
#[pyo3(signature = (form, criterion = None))]
fn classify<'py>(py: Python<'py>, form: &str, criterion: Option<&str>) -> PyResult<Bound<'py, PyDict>> {
    let f = cubic(form)?;
    let d = PyDict::new(py);
    if let Some(name) = criterion {
        let c: Criterion = name.parse().map_err(raise)?;
        d.set_item("criterion", c.name())?;
        d.set_item(
            "completely_reducible",
            hierarchy::is_completely_reducible(&f, c).map_err(raise)?,
        )?;
        return Ok(d);
    }
    let c = hierarchy::classify(&f);
    d.set_item("kind", format!("{:?}", c.kind))?;
    d.set_item("completely_reducible", c.kind.is_completely_reducible())?;
    let w = &c.witnesses;
    d.set_item("lambda", w.lambda.as_ref().map(|l| l.to_string()))?;
    d.set_item("apex", w.apex.as_ref().map(|z| z.iter().map(|r| r.to_string()).collect::<Vec<_>>()))?;
    d.set_item("cube_root", w.cube_root.as_ref().map(|(s, l)| (s.to_string(), l.to_string())))?;
    d.set_item("criteria", c.criteria_fired.clone())?;
    Ok(d)
}

/// Factors a completely reducible cubic into three lines.
#[pyfunction]
#[pyo3(signature = (form, tolerance = None))]
fn factor<'py>(py: Python<'py>, form: &str, tolerance: Option<f64>) -> PyResult<Bound<'py, PyDict>> {
    let mut opts = FactorOptions::default();
    if let Some(t) = tolerance {
        opts.tolerance = t;
    }
    let fz = factor_with(&cubic(form)?, &opts).map_err(raise)?;
    factorization(py, &fz)
}

/// Discriminant, squares decomposition and rational factors of a quadratic.
#[pyfunction]
fn quad<'py>(py: Python<'py>, form: &str) -> PyResult<Bound<'py, PyDict>> {
    let q = QuadraticForm::parse(form).map_err(raise)?;
    let d = PyDict::new(py);
    d.set_item("discriminant", quadratics::quad_discriminant(&q).to_string())?;
    d.set_item("square_test", quadratics::square_test(&q).to_string())?;
    let squares: Vec<(String, String)> = quadratics::sum_of_squares(&q)
        .terms
        .iter()
        .map(|(c, l)| (c.to_string(), l.to_string()))
        .collect();
    d.set_item("squares", squares)?;
    match quadratics::factor_quadratic(&q) {
        Ok(qf) => {
            let factors: Vec<Vec<Complex64>> = qf.factors.iter().map(|l| l.0.to_vec()).collect();
            d.set_item("factors", (qf.scalar, factors))?;
        }
        Err(Error::Irreducible | Error::ZeroForm) => d.set_item("factors", py.None())?,
        Err(e) => return Err(raise(e)),
    }
    Ok(d)
}

/// Parameters and factors of a cubic invariant under cyclic permutations,
/// or None when the form is not.
#[pyfunction]
fn symmetric<'py>(py: Python<'py>, form: &str) -> PyResult<Option<Bound<'py, PyDict>>> {
    let Some(p) = symmetry::symmetric_decompose(&cubic(form)?) else {
        return Ok(None);
    };
    let d = PyDict::new(py);
    d.set_item("a", p.a.to_string())?;
    d.set_item("b", p.b.to_string())?;
    d.set_item("c", p.c.to_string())?;
    d.set_item("d", p.d.to_string())?;
    let reducible = symmetry::symmetric_reducible(&p);
    d.set_item("completely_reducible", reducible)?;
    if reducible {
        let fz = symmetry::symmetric_factor(&p).map_err(raise)?;
        d.set_item("factorization", factorization(py, &fz)?)?;
    }
    Ok(Some(d))
}

/// Runs the identity corpus and returns (passed, failed, failing ids).
#[pyfunction]
#[pyo3(signature = (tier = None))]
fn verify_identities(py: Python<'_>, tier: Option<u8>) -> (usize, usize, Vec<String>) {
    let summary = py.detach(|| corpus::verify_all(tier));
    let failing = summary
        .reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| r.id.clone())
        .collect();
    (summary.passed, summary.failed, failing)
}

#[pymodule(name = "ternary_cubic")]
fn ternary_cubic_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("CubicError", m.py().get_type::<CubicError>())?;
    m.add_function(wrap_pyfunction!(concomitant, m)?)?;
    m.add_function(wrap_pyfunction!(concomitants, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(factor, m)?)?;
    m.add_function(wrap_pyfunction!(quad, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identities, m)?)?;
    Ok(())
}
