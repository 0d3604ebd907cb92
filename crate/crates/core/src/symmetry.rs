//! Cubics unchanged by the cyclic permutation `x1 → x2 → x3 → x1`.
//!
//! Such a form is `a P + b Q + c s³ + d E` with
//! `P = (2x1−x2−x3)(2x2−x3−x1)(2x3−x1−x2)`, `Q = (x1−x2)(x2−x3)(x3−x1)`,
//! `s = x1+x2+x3` and `E = x1³+x2³+x3³−3x1x2x3`.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{factor_binary_cubic, BinaryCubic, Factorization, Method, RootMethod};
use crate::forms::CubicForm;
use crate::linalg::rref;
use crate::numeric::{ComplexLine, TAU_FAC, TAU_ROOT};
use crate::parse::parse;
use crate::poly::Poly;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetricParams {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl SymmetricParams {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        SymmetricParams { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    /// `a P + b Q + c s³ + d E`.
    pub fn recombine(&self) -> CubicForm {
        let [p, q, s3, e] = basis();
        let f = Poly::sum([
            &p.scale(&self.a),
            &q.scale(&self.b),
            &s3.scale(&self.c),
            &e.scale(&self.d),
        ]);
        CubicForm::from_poly(&f).expect("cubic")
    }

    /// `(27a² + b²) c + d³`.
    pub fn constraint(&self) -> Rational {
        let k = &(&Rational::from_int(27) * &(&self.a * &self.a)) + &(&self.b * &self.b);
        &(&k * &self.c) + &self.d.pow(3)
    }
}

/// `[P, Q, s³, E]`.
pub fn basis() -> [Poly; 4] {
    let p = |s: &str| parse(s).expect("basis form");
    let l = |s: &str| p(s);
    [
        l("2x1 - x2 - x3").mul(&l("2x2 - x3 - x1")).mul(&l("2x3 - x1 - x2")),
        l("x1 - x2").mul(&l("x2 - x3")).mul(&l("x3 - x1")),
        l("x1 + x2 + x3").pow(3),
        p("x1^3 + x2^3 + x3^3 - 3x1 x2 x3"),
    ]
}

/// `f(x2, x3, x1) = f(x1, x2, x3)`.
pub fn is_cyclic(f: &CubicForm) -> bool {
    let c = |s: [u8; 3]| f.coeff(&s);
    c([1, 1, 1]) == c([2, 2, 2])
        && c([2, 2, 2]) == c([3, 3, 3])
        && c([1, 1, 2]) == c([2, 2, 3])
        && c([2, 2, 3]) == c([1, 3, 3])
        && c([1, 2, 2]) == c([2, 3, 3])
        && c([2, 3, 3]) == c([1, 1, 3])
}

/// The parameters `(a, b, c, d)` of a cyclic-invariant cubic.
pub fn symmetric_decompose(f: &CubicForm) -> Option<SymmetricParams> {
    if !is_cyclic(f) {
        return None;
    }
    let cols: Vec<CubicForm> = basis()
        .iter()
        .map(|p| CubicForm::from_poly(p).expect("cubic"))
        .collect();
    let mut m: Vec<Vec<Rational>> = (0..10)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs()[r].clone()).collect();
            row.push(f.coeffs()[r].clone());
            row
        })
        .collect();
    let pivots = rref(&mut m);
    if pivots.contains(&4) || pivots.len() < 4 {
        return None;
    }
    let v: Vec<Rational> = (0..4).map(|i| m[i][4].clone()).collect();
    Some(SymmetricParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()))
}

/// Complete reducibility: `a = b = c = 0` or `(27a² + b²) c + d³ = 0`.
pub fn symmetric_reducible(p: &SymmetricParams) -> bool {
    (p.a.is_zero() && p.b.is_zero() && p.c.is_zero()) || p.constraint().is_zero()
}

fn omega() -> Complex64 {
    Complex64::new(-0.5, 3f64.sqrt() / 2.0)
}

fn cx(r: &Rational) -> Complex64 {
    Complex64::new(r.to_f64(), 0.0)
}

/// The cube roots chosen for the factors: `α1³ = 9a − i√3 b`,
/// `α2³ = 9a + i√3 b` (principal roots), and `γ³ = 9c` with `−α1α2γ`
/// closest to `3d`.
pub fn radicals(p: &SymmetricParams) -> (Complex64, Complex64, Complex64) {
    let r3 = 3f64.sqrt();
    let nine_a = 9.0 * p.a.to_f64();
    let b = p.b.to_f64();
    let a1 = Complex64::new(nine_a, -r3 * b).cbrt();
    let a2 = Complex64::new(nine_a, r3 * b).cbrt();
    let g0 = Complex64::new(9.0 * p.c.to_f64(), 0.0).cbrt();
    let target = 3.0 * cx(&p.d);
    let w = omega();
    let gamma = [g0, g0 * w, g0 * w * w]
        .into_iter()
        .min_by(|x, y| {
            let ex = (-a1 * a2 * x - target).norm();
            let ey = (-a1 * a2 * y - target).norm();
            ex.total_cmp(&ey)
        })
        .expect("three candidates");
    (a1, a2, gamma)
}

/// Factors a reducible cyclic cubic as `9f = A B C`; when `c ≠ 0` the
/// cyclic-root factorization is computed as well and must agree.
pub fn symmetric_factor(p: &SymmetricParams) -> Result<Factorization> {
    if !symmetric_reducible(p) {
        return Err(Error::NotReducible);
    }
    let f = p.recombine();
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let one = Complex64::new(1.0, 0.0);
    let w = omega();
    let w2 = w * w;
    if p.a.is_zero() && p.b.is_zero() && p.c.is_zero() {
        let lines = [
            ComplexLine([one, one, one]),
            ComplexLine([one, w, w2]),
            ComplexLine([one, w2, w]),
        ];
        return Factorization::assemble(&f, cx(&p.d), &lines, Method::Symmetric, None, TAU_FAC);
    }
    let (a1, a2, g) = radicals(p);
    let scale = (9.0 * p.a.to_f64().abs()).max(p.b.to_f64().abs()).max(3.0 * p.d.to_f64().abs()).max(1.0);
    let mismatch = (-a1 * a2 * g - 3.0 * cx(&p.d)).norm();
    if mismatch > TAU_ROOT * scale.max(1.0) * 1e3 {
        return Err(Error::ResidualTooLarge {
            residual: mismatch,
            tolerance: TAU_ROOT,
        });
    }
    // radical factors assembled coefficientwise
    let combo = |u: [Complex64; 3], v: [Complex64; 3]| ComplexLine([0, 1, 2].map(|i| a1 * u[i] + g + a2 * v[i]));
    let lines = [
        combo([one, w2, w], [one, w, w2]),
        combo([w2, w, one], [w, w2, one]),
        combo([w, one, w2], [w2, one, w]),
    ];
    let main = Factorization::assemble(&f, Complex64::new(1.0 / 9.0, 0.0), &lines, Method::Symmetric, None, TAU_FAC)?;
    if !p.c.is_zero() {
        let other = cyclic_root_factor(p)?;
        if !main.same_lines(&other, 1e-6) {
            return Err(Error::CrossCheckMismatch {
                quantity: "symmetric factors".into(),
                detail: format!("{:?} vs {:?}", main.factors, other.factors),
            });
        }
    }
    Ok(main)
}

/// Roots of `27c(x³ − x²) + (9c + 3d)x − (2a + c + d)`, ordered so that
/// `2b = 27c (r1−r2)(r2−r3)(r3−r1)`.
///
/// The opposite orientation `27c (r1−r2)(r1−r3)(r2−r3)` reproduces the form
/// with `b` negated, so the sign here is the one that recombines to `f`.
pub fn cyclic_roots(p: &SymmetricParams) -> Result<[Complex64; 3]> {
    if p.c.is_zero() {
        return Err(Error::Inapplicable("c is zero".into()));
    }
    let n = Rational::from_int;
    let c27 = &n(27) * &p.c;
    let poly = BinaryCubic([
        c27.clone(),
        -c27.clone(),
        &(&n(9) * &p.c) + &(&n(3) * &p.d),
        -(&(&(&n(2) * &p.a) + &p.c) + &p.d),
    ]);
    let pairs = factor_binary_cubic(&poly, RootMethod::Companion)?;
    let r = pairs.map(|(a1, a2)| -a2 / a1);
    let lhs = 2.0 * cx(&p.b);
    let orient = |r: &[Complex64; 3]| 27.0 * cx(&p.c) * (r[0] - r[1]) * (r[1] - r[2]) * (r[2] - r[0]);
    let swapped = [r[1], r[0], r[2]];
    Ok(if (orient(&r) - lhs).norm() <= (orient(&swapped) - lhs).norm() {
        r
    } else {
        swapped
    })
}

/// `f = 27c (r1x1 + r2x2 + r3x3)(r2x1 + r3x2 + r1x3)(r3x1 + r1x2 + r2x3)`.
pub fn cyclic_root_factor(p: &SymmetricParams) -> Result<Factorization> {
    let r = cyclic_roots(p)?;
    let lines = [
        ComplexLine([r[0], r[1], r[2]]),
        ComplexLine([r[1], r[2], r[0]]),
        ComplexLine([r[2], r[0], r[1]]),
    ];
    let f = p.recombine();
    Factorization::assemble(&f, 27.0 * cx(&p.c), &lines, Method::Symmetric, None, TAU_FAC)
}

/// Applies `x1 → x2 → x3 → x1` to a line: `l(x2, x3, x1)`.
pub fn cycle_line(l: &ComplexLine) -> ComplexLine {
    ComplexLine([l.0[2], l.0[0], l.0[1]])
}
