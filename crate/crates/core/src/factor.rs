//! Factoring completely reducible cubics into linear forms: the tangent-line
//! recipe for `F ≢ 0`, the apex path for `Δ = 0`, and sums of two cubes.

use nalgebra::Matrix3;
use num_complex::Complex64;
use serde::Serialize;

use crate::concomitants::{f6u, gamma, hessian, theta};
use crate::error::{Error, Result};
use crate::forms::{point, CubicForm, LinearForm, QuadraticForm};
use crate::linalg::null_space;
use crate::numeric::{canonicalize, expand_product, relative_residual, serialize_complex, ComplexLine, TAU_FAC, TAU_ROOT};
use crate::poly::Poly;
use crate::quadratics::factor_quadratic;
use crate::rational::Rational;
use crate::subst::map_vars;
use crate::var::{triple, Family};

type Point = [Rational; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    Generic,
    Singular,
    TwoCubes,
    Symmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum RootMethod {
    #[default]
    Companion,
    Cardano,
}

#[derive(Debug, Clone, Copy)]
pub struct FactorOptions {
    pub tolerance: f64,
    pub root_method: RootMethod,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            tolerance: TAU_FAC,
            root_method: RootMethod::Companion,
        }
    }
}

/// Rational factors, when the numeric ones round to small rationals that
/// multiply back to the input exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExactFactors {
    pub scalar: Rational,
    pub factors: [LinearForm; 3],
}

/// `f = scalar · A · B · C`.
#[derive(Debug, Clone, Serialize)]
pub struct Factorization {
    #[serde(serialize_with = "serialize_complex")]
    pub scalar: Complex64,
    pub factors: [ComplexLine; 3],
    pub exact: Option<ExactFactors>,
    pub residual: f64,
    pub method: Method,
    /// The line `u_x = 0` used by the generic recipe.
    pub u: Option<[i64; 3]>,
}

impl Factorization {
    /// Builds the canonical form of `scalar · ∏ lines` and checks it against `f`.
    pub fn assemble(
        f: &CubicForm,
        scalar: Complex64,
        lines: &[ComplexLine; 3],
        method: Method,
        u: Option<[i64; 3]>,
        tolerance: f64,
    ) -> Result<Self> {
        let (scalar, lines) = canonicalize(scalar, lines);
        let factors = [lines[0], lines[1], lines[2]];
        let residual = relative_residual(scalar, &factors, f.coeffs());
        if residual > tolerance || !residual.is_finite() {
            return Err(Error::ResidualTooLarge { residual, tolerance });
        }
        let exact = rationalize(f, &factors);
        Ok(Factorization {
            scalar,
            factors,
            exact,
            residual,
            method,
            u,
        })
    }

    /// Whether two factorizations have the same lines up to scaling.
    pub fn same_lines(&self, other: &Factorization, tol: f64) -> bool {
        crate::numeric::same_lines(&self.factors, &other.factors, tol)
    }
}

/// `f_yyy X1³ + f_yyz X1²X2 + f_yzz X1X2² + f_zzz X2³`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryCubic(pub [Rational; 4]);

impl BinaryCubic {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn discriminant(&self) -> Rational {
        let [a, b, c, d] = &self.0;
        let n = Rational::from_int;
        let mut s = &(b * b) * &(c * c);
        s -= &(&n(4) * &(a * &c.pow(3)));
        s -= &(&n(4) * &(&b.pow(3) * d));
        s += &(&n(18) * &(&(a * b) * &(c * d)));
        s -= &(&n(27) * &(&(a * a) * &(d * d)));
        s
    }

    pub fn eval(&self, x1: Complex64, x2: Complex64) -> Complex64 {
        let c = self.0.clone().map(|v| Complex64::new(v.to_f64(), 0.0));
        c[0] * x1 * x1 * x1 + c[1] * x1 * x1 * x2 + c[2] * x1 * x2 * x2 + c[3] * x2 * x2 * x2
    }
}

fn cross(p: &Point, q: &Point) -> Point {
    [
        &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
        &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
        &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
    ]
}

fn dot(p: &Point, q: &Point) -> Rational {
    let mut s = Rational::ZERO;
    for i in 0..3 {
        s += &(&p[i] * &q[i]);
    }
    s
}

fn to_point(u: [i64; 3]) -> Point {
    u.map(Rational::from_int)
}

/// Integer triples by shells of max-abs `N = 1, 2, …`; within a shell,
/// lexicographic with each coordinate ranked 0, 1, −1, 2, −2, … so that
/// `(0,0,1)` comes first.
pub fn integer_points() -> impl Iterator<Item = [i64; 3]> {
    (1i64..).flat_map(|n| {
        let ranked: Vec<i64> = std::iter::once(0).chain((1..=n).flat_map(|k| [k, -k])).collect();
        let mut shell = Vec::new();
        for &a in &ranked {
            for &b in &ranked {
                for &c in &ranked {
                    if a.abs().max(b.abs()).max(c.abs()) == n {
                        shell.push([a, b, c]);
                    }
                }
            }
        }
        shell
    })
}

fn value_at_u(p: &Poly, u: [i64; 3]) -> Result<Rational> {
    p.eval_rational(&point(Family::U, &to_point(u)))
}

/// First integer point (in [`integer_points`] order) where `F` is nonzero.
pub fn choose_u(f: &CubicForm) -> Result<[i64; 3]> {
    choose_u_for(&f6u(f))
}

fn choose_u_for(big_f: &Poly) -> Result<[i64; 3]> {
    if big_f.is_zero() {
        return Err(Error::FIsIdenticallyZero);
    }
    // a nonzero sextic cannot vanish on a grid with 7 values per coordinate
    for u in integer_points().take_while(|u| u.iter().all(|c| c.abs() <= 3)) {
        if !value_at_u(big_f, u)?.is_zero() {
            return Ok(u);
        }
    }
    unreachable!("nonzero sextic vanishes on the grid")
}

/// Two points spanning the line `u_x = 0` with `y × z = u`.
pub fn line_points(u: &Point) -> Result<(Point, Point)> {
    if u.iter().all(Rational::is_zero) {
        return Err(Error::ZeroLine);
    }
    let k = (0..3).min_by_key(|&i| u[i].abs()).expect("three components");
    let mut w = [Rational::ZERO, Rational::ZERO, Rational::ZERO];
    w[k] = Rational::ONE;
    let y = cross(&w, u);
    let inv = dot(&y, &y).recip();
    let z = cross(u, &y).map(|c| &c * &inv);
    debug_assert_eq!(&cross(&y, &z), u);
    Ok((y, z))
}

/// The restriction `f(X1 y + X2 z)`.
pub fn restrict_to_line(f: &CubicForm, y: &Point, z: &Point) -> BinaryCubic {
    let three = Rational::from_int(3);
    let b = BinaryCubic([
        f.trilinear(y, y, y),
        &three * &f.trilinear(y, y, z),
        &three * &f.trilinear(y, z, z),
        f.trilinear(z, z, z),
    ]);
    #[cfg(debug_assertions)]
    {
        // δ equals F at u = y × z
        let u = cross(y, z);
        let big_f = f6u(f).eval_rational(&point(Family::U, &u)).expect("u bound");
        debug_assert_eq!(b.discriminant(), big_f);
    }
    b
}

fn c(r: &Rational) -> Complex64 {
    Complex64::new(r.to_f64(), 0.0)
}

/// Factors `b = ∏ (A_i1 X1 + A_i2 X2)`. Repeated roots are found exactly;
/// distinct roots numerically, then polished by Newton steps.
pub fn factor_binary_cubic(b: &BinaryCubic, method: RootMethod) -> Result<[(Complex64, Complex64); 3]> {
    if b.is_zero() {
        return Err(Error::ZeroBinaryCubic);
    }
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    // each leading zero coefficient is a factor X2
    let m = b.0.iter().take_while(|v| v.is_zero()).count();
    let rest: Vec<Rational> = b.0[m..].to_vec();
    let lead = rest[0].clone();
    let monic: Vec<Rational> = rest.iter().map(|v| v * &lead.recip()).collect();
    let roots = monic_roots(&monic, method);
    let mut out = Vec::with_capacity(3);
    for _ in 0..m {
        out.push((zero, one));
    }
    for r in roots {
        out.push((one, -r));
    }
    out[0].0 *= c(&lead);
    out[0].1 *= c(&lead);
    Ok([out[0], out[1], out[2]])
}

/// Roots of `t^n + p1 t^(n−1) + … + pn`, `n ≤ 3`.
fn monic_roots(p: &[Rational], method: RootMethod) -> Vec<Complex64> {
    let n = p.len() - 1;
    let cr = |v: Rational| vec![c(&v)];
    match n {
        0 => vec![],
        1 => cr(-&p[1]),
        2 => {
            let disc = &(&p[1] * &p[1]) - &(&Rational::from_int(4) * &p[2]);
            let half = Rational::new(-1, 2);
            if disc.is_zero() {
                let r = &p[1] * &half;
                vec![c(&r), c(&r)]
            } else {
                let s = Complex64::new(disc.to_f64(), 0.0).sqrt();
                let b = c(&p[1]);
                // avoid cancellation: q = −(b + sign(b)·s)/2, roots q and p2/q
                let q = if b.re >= 0.0 { -(b + s) / 2.0 } else { -(b - s) / 2.0 };
                if q.norm() == 0.0 {
                    vec![s / 2.0, -s / 2.0]
                } else {
                    vec![q, c(&p[2]) / q]
                }
            }
        }
        3 => {
            let (a1, a2, a3) = (&p[1], &p[2], &p[3]);
            let full = BinaryCubic([Rational::ONE, a1.clone(), a2.clone(), a3.clone()]);
            let n3 = Rational::from_int(3);
            let h = &(a1 * a1) - &(&n3 * a2);
            if full.discriminant().is_zero() {
                if h.is_zero() {
                    let r = -(a1 * &Rational::new(1, 3));
                    return vec![c(&r); 3];
                }
                // double root r and simple root s, both rational
                let r = &(&(&Rational::from_int(9) * a3) - &(a1 * a2)) * &(&Rational::from_int(2) * &h).recip();
                let s = &(&-a1.clone() - &r) - &r;
                return vec![c(&r), c(&r), c(&s)];
            }
            let mut roots = match method {
                RootMethod::Companion => companion_roots(a1.to_f64(), a2.to_f64(), a3.to_f64()),
                RootMethod::Cardano => cardano_roots(a1.to_f64(), a2.to_f64(), a3.to_f64()),
            };
            for r in &mut roots {
                *r = polish(*r, [a1.to_f64(), a2.to_f64(), a3.to_f64()]);
            }
            roots
        }
        _ => unreachable!("binary cubic"),
    }
}

fn companion_roots(a1: f64, a2: f64, a3: f64) -> Vec<Complex64> {
    let m = Matrix3::new(-a1, -a2, -a3, 1.0, 0.0, 0.0, 0.0, 1.0, 0.0);
    m.complex_eigenvalues().iter().copied().collect()
}

/// Cardano's formula for `t³ + a1 t² + a2 t + a3`.
pub fn cardano_roots(a1: f64, a2: f64, a3: f64) -> Vec<Complex64> {
    // t = s − a1/3 gives s³ + p s + q
    let p = a2 - a1 * a1 / 3.0;
    let q = 2.0 * a1 * a1 * a1 / 27.0 - a1 * a2 / 3.0 + a3;
    let shift = Complex64::new(-a1 / 3.0, 0.0);
    let omega = Complex64::new(-0.5, 3f64.sqrt() / 2.0);
    let disc = Complex64::new(q * q / 4.0 + p * p * p / 27.0, 0.0).sqrt();
    let mut big = Complex64::new(-q / 2.0, 0.0) + disc;
    if big.norm() < 1e-300 {
        big = Complex64::new(-q / 2.0, 0.0) - disc;
    }
    if big.norm() < 1e-300 {
        return vec![shift; 3];
    }
    let cu = big.cbrt();
    let mut out = Vec::with_capacity(3);
    let mut w = Complex64::new(1.0, 0.0);
    for _ in 0..3 {
        let s1 = cu * w;
        out.push(s1 - Complex64::new(p / 3.0, 0.0) / s1 + shift);
        w *= omega;
    }
    out
}

fn polish(mut r: Complex64, a: [f64; 3]) -> Complex64 {
    for _ in 0..3 {
        let v = ((r + a[0]) * r + a[1]) * r + a[2];
        let d = (3.0 * r + 2.0 * a[0]) * r + a[1];
        if d.norm() == 0.0 {
            break;
        }
        let next = r - v / d;
        let vn = ((next + a[0]) * next + a[1]) * next + a[2];
        if vn.norm() >= v.norm() {
            break;
        }
        r = next;
    }
    r
}

/// `A_x = f_xyy A2² − f_xyz A1 A2 + f_xzz A1²`, the tangent at the point of
/// the line where `A1 X1 + A2 X2` vanishes.
pub fn tangent_line(f: &CubicForm, y: &Point, z: &Point, a1: Complex64, a2: Complex64) -> Result<ComplexLine> {
    let three = Rational::from_int(3);
    let six = Rational::from_int(6);
    let fxyy = f.trilinear_line(y, y).triple().map(|v| c(&(&v * &three)));
    let fxyz = f.trilinear_line(y, z).triple().map(|v| c(&(&v * &six)));
    let fxzz = f.trilinear_line(z, z).triple().map(|v| c(&(&v * &three)));
    let line = ComplexLine([0, 1, 2].map(|i| fxyy[i] * a2 * a2 - fxyz[i] * a1 * a2 + fxzz[i] * a1 * a1));
    let scale = (f.max_abs() * (a1.norm() + a2.norm()).powi(2)).max(f64::MIN_POSITIVE);
    if line.max_abs() <= TAU_ROOT * scale {
        return Err(Error::DegenerateTangent("tangent line vanishes at a repeated intersection".into()));
    }
    Ok(line)
}

/// The tangent-line recipe: `f = −(1/F(u)) A B C`. Requires `Γ ≡ 0` and
/// `F ≢ 0`.
pub fn factor_generic(f: &CubicForm) -> Result<Factorization> {
    factor_generic_with(f, &FactorOptions::default())
}

pub fn factor_generic_with(f: &CubicForm, opts: &FactorOptions) -> Result<Factorization> {
    if !gamma(f).is_zero() {
        return Err(Error::PreconditionViolated("Gamma is not identically zero".into()));
    }
    let big_f = f6u(f);
    if big_f.is_zero() {
        return Err(Error::PreconditionViolated("F is identically zero".into()));
    }
    let u = choose_u_for(&big_f)?;
    generic_at(f, u, &value_at_u(&big_f, u)?, opts)
}

/// The recipe at a fixed `u` with `F(u) ≠ 0`.
pub fn generic_at(f: &CubicForm, u: [i64; 3], fu: &Rational, opts: &FactorOptions) -> Result<Factorization> {
    let (y, z) = line_points(&to_point(u))?;
    let b = restrict_to_line(f, &y, &z);
    let pairs = factor_binary_cubic(&b, opts.root_method)?;
    let mut lines = [ComplexLine::real([0.0; 3]); 3];
    for (i, (a1, a2)) in pairs.iter().enumerate() {
        lines[i] = tangent_line(f, &y, &z, *a1, *a2)?;
    }
    let scalar = -c(&fu.recip());
    Factorization::assemble(f, scalar, &lines, Method::Generic, Some(u), opts.tolerance)
}

/// A nonzero `z` with `f_xxz ≡ 0`, if any.
pub fn apex(f: &CubicForm) -> Option<Point> {
    let p = f.to_poly();
    let partials: Vec<QuadraticForm> = triple(Family::X)
        .iter()
        .map(|&v| QuadraticForm::from_poly(&p.derive(v)).expect("quadratic"))
        .collect();
    let rows: Vec<Vec<Rational>> = (0..6)
        .map(|r| partials.iter().map(|q| q.coeffs()[r].clone()).collect())
        .collect();
    let basis = null_space(&rows, 3);
    basis.first().map(|v| [v[0].clone(), v[1].clone(), v[2].clone()])
}

/// Factoring through the apex: when `f_xxz ≡ 0`, `f` is a binary cubic in
/// coordinates on the plane transverse to `z`.
pub fn factor_singular(f: &CubicForm) -> Result<Factorization> {
    factor_singular_with(f, &FactorOptions::default())
}

pub fn factor_singular_with(f: &CubicForm, opts: &FactorOptions) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    let z = apex(f).ok_or(Error::NotSingular)?;
    // x = X1 e_i + X2 e_j + X3 z with k the last index where z is nonzero
    let k = (0..3).rev().find(|&i| !z[i].is_zero()).expect("nonzero apex");
    let (i, j) = match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let e = |n: usize| {
        let mut v = [Rational::ZERO, Rational::ZERO, Rational::ZERO];
        v[n] = Rational::ONE;
        v
    };
    let (p, q) = (e(i), e(j));
    let three = Rational::from_int(3);
    let b = BinaryCubic([
        f.trilinear(&p, &p, &p),
        &three * &f.trilinear(&p, &p, &q),
        &three * &f.trilinear(&p, &q, &q),
        f.trilinear(&q, &q, &q),
    ]);
    let pairs = factor_binary_cubic(&b, opts.root_method)?;
    // X1 = x_i − (z_i/z_k) x_k and X2 = x_j − (z_j/z_k) x_k
    let zk = z[k].recip();
    let mut x1 = [Complex64::new(0.0, 0.0); 3];
    let mut x2 = x1;
    x1[i] = Complex64::new(1.0, 0.0);
    x1[k] = -c(&(&z[i] * &zk));
    x2[j] = Complex64::new(1.0, 0.0);
    x2[k] = -c(&(&z[j] * &zk));
    let mut lines = [ComplexLine::real([0.0; 3]); 3];
    for (n, (a1, a2)) in pairs.iter().enumerate() {
        lines[n] = ComplexLine([0, 1, 2].map(|t| a1 * x1[t] + a2 * x2[t]));
    }
    Factorization::assemble(f, Complex64::new(1.0, 0.0), &lines, Method::Singular, None, opts.tolerance)
}

/// `f = a0 a³ + b0 b³`.
#[derive(Debug, Clone, Serialize)]
pub struct TwoCubes {
    #[serde(serialize_with = "serialize_complex")]
    pub a0: Complex64,
    pub a: ComplexLine,
    #[serde(serialize_with = "serialize_complex")]
    pub b0: Complex64,
    pub b: ComplexLine,
    pub residual: f64,
}

/// Writes `f` as a sum of two cubes of independent lines. Requires `Δ = 0`
/// and `F ≢ 0`; the lines are the factors of `θ` at a point `u` where it is
/// nonzero.
pub fn two_cubes(f: &CubicForm) -> Result<TwoCubes> {
    if !hessian(f).is_zero() {
        return Err(Error::NotApplicable("Delta is not zero".into()));
    }
    if f6u(f).is_zero() {
        return Err(Error::NotApplicable("F is identically zero".into()));
    }
    let th = theta(f);
    let u = integer_points()
        .find(|&u| {
            let b = crate::forms::point(Family::U, &to_point(u))
                .into_iter()
                .map(|(k, v)| (k, Poly::constant(v)))
                .collect();
            !map_vars(&th, &b).is_zero()
        })
        .expect("theta is nonzero");
    let bindings = point(Family::U, &to_point(u))
        .into_iter()
        .map(|(k, v)| (k, Poly::constant(v)))
        .collect();
    let q = QuadraticForm::from_poly(&map_vars(&th, &bindings))?;
    let lines = factor_quadratic(&q)?.factors;
    let (a, b) = (lines[0], lines[1]);
    let ca = expand_product(Complex64::new(1.0, 0.0), &[a, a, a]);
    let cb = expand_product(Complex64::new(1.0, 0.0), &[b, b, b]);
    let target: Vec<Complex64> = f.coeffs().iter().map(c).collect();
    // least squares for (a0, b0) through the normal equations
    let mut g = [[Complex64::new(0.0, 0.0); 2]; 2];
    let mut r = [Complex64::new(0.0, 0.0); 2];
    for t in 0..10 {
        let row = [ca[t], cb[t]];
        for i in 0..2 {
            for j in 0..2 {
                g[i][j] += row[i].conj() * row[j];
            }
            r[i] += row[i].conj() * target[t];
        }
    }
    let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
    if det.norm() == 0.0 {
        return Err(Error::NotApplicable("cubes of the lines are dependent".into()));
    }
    let a0 = (r[0] * g[1][1] - g[0][1] * r[1]) / det;
    let b0 = (g[0][0] * r[1] - g[1][0] * r[0]) / det;
    let norm = f.max_abs();
    let residual = (0..10)
        .map(|t| (a0 * ca[t] + b0 * cb[t] - target[t]).norm())
        .fold(0.0, f64::max)
        / norm;
    if residual > TAU_FAC {
        return Err(Error::ResidualTooLarge {
            residual,
            tolerance: TAU_FAC,
        });
    }
    Ok(TwoCubes { a0, a, b0, b, residual })
}

/// Factors any completely reducible cubic, choosing the path from the
/// concomitants: the recipe when `F ≢ 0`, otherwise the apex path.
pub fn factor(f: &CubicForm) -> Result<Factorization> {
    factor_with(f, &FactorOptions::default())
}

pub fn factor_with(f: &CubicForm, opts: &FactorOptions) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    if !gamma(f).is_zero() {
        return Err(Error::NotReducible);
    }
    let big_f = f6u(f);
    if big_f.is_zero() {
        return factor_singular_with(f, opts);
    }
    let u = choose_u_for(&big_f)?;
    match generic_at(f, u, &value_at_u(&big_f, u)?, opts) {
        Err(Error::DegenerateTangent(_)) if hessian(f).is_zero() => factor_singular_with(f, opts),
        other => other,
    }
}

/// Best rational approximation with denominator at most `max_den`.
fn small_rational(x: f64, max_den: i64) -> Option<Rational> {
    if !x.is_finite() || x.abs() > 1e12 {
        return None;
    }
    let (mut h0, mut h1, mut k0, mut k1) = (0i64, 1i64, 1i64, 0i64);
    let mut v = x;
    for _ in 0..40 {
        let a = v.floor();
        let ai = a as i64;
        let h2 = ai.checked_mul(h1)?.checked_add(h0)?;
        let k2 = ai.checked_mul(k1)?.checked_add(k0)?;
        if k2 > max_den {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        if ((h1 as f64) / (k1 as f64) - x).abs() <= 1e-9 * x.abs().max(1.0) {
            return Some(Rational::new(h1, k1));
        }
        let frac = v - a;
        if frac.abs() < 1e-15 {
            break;
        }
        v = 1.0 / frac;
    }
    (k1 != 0 && ((h1 as f64) / (k1 as f64) - x).abs() <= 1e-9 * x.abs().max(1.0)).then(|| Rational::new(h1, k1))
}

fn rationalize(f: &CubicForm, lines: &[ComplexLine; 3]) -> Option<ExactFactors> {
    let mut forms = Vec::with_capacity(3);
    for l in lines {
        let mut coeffs = Vec::with_capacity(3);
        for v in &l.0 {
            if v.im.abs() > 1e-9 {
                return None;
            }
            coeffs.push(small_rational(v.re, 10_000)?);
        }
        forms.push(LinearForm::new([coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone()]));
    }
    let product = forms
        .iter()
        .fold(Poly::one(), |acc, l| acc.mul(&l.to_poly()));
    let product = CubicForm::from_poly(&product).ok()?;
    let k = f.coeffs().iter().position(|v| !v.is_zero())?;
    if product.coeffs()[k].is_zero() {
        return None;
    }
    let scalar = &f.coeffs()[k] * &product.coeffs()[k].recip();
    let scaled: Vec<Rational> = product.coeffs().iter().map(|v| v * &scalar).collect();
    (scaled == f.coeffs().to_vec()).then(|| ExactFactors {
        scalar,
        factors: [forms[0].clone(), forms[1].clone(), forms[2].clone()],
    })
}

/// The exact product of three rational lines.
pub fn exact_product(lines: &[LinearForm; 3]) -> CubicForm {
    let p = lines.iter().fold(Poly::one(), |acc, l| acc.mul(&l.to_poly()));
    CubicForm::from_poly(&p).expect("cubic")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(s: &str) -> CubicForm {
        CubicForm::parse(s).unwrap()
    }

    const EXAMPLE: &str = "x1^3 - 6x1 x2^2 - 6x2^3 + 6x1^2 x3 + 18x1 x2 x3 + 12x2^2 x3 + 4x3^3";

    #[test]
    fn point_order_starts_at_e3() {
        let first: Vec<[i64; 3]> = integer_points().take(3).collect();
        assert_eq!(first, vec![[0, 0, 1], [0, 0, -1], [0, 1, 0]]);
        assert_eq!(integer_points().take_while(|u| u.iter().all(|c| c.abs() <= 1)).count(), 26);
    }

    #[test]
    fn choose_u_on_example() {
        let f = cubic(EXAMPLE);
        assert_eq!(choose_u(&f).unwrap(), [0, 0, 1]);
        let big_f = f6u(&f);
        assert_eq!(value_at_u(&big_f, [0, 0, 1]).unwrap(), Rational::from_int(-108));
        assert_eq!(value_at_u(&big_f, [1, 1, 0]).unwrap(), Rational::from_int(-432));
        assert_eq!(choose_u(&cubic("x1 x2^2")), Err(Error::FIsIdenticallyZero));
    }

    #[test]
    fn line_points_cross_to_u() {
        for u in integer_points().take(200) {
            let u = to_point(u);
            let (y, z) = line_points(&u).unwrap();
            assert_eq!(cross(&y, &z), u);
        }
        assert_eq!(line_points(&to_point([0, 0, 0])), Err(Error::ZeroLine));
    }

    #[test]
    fn restrictions_on_example() {
        let f = cubic(EXAMPLE);
        let b = restrict_to_line(&f, &to_point([1, 0, 0]), &to_point([0, 1, 0]));
        assert_eq!(b.0, [1, 0, -6, -6].map(Rational::from_int));
        let b = restrict_to_line(&f, &to_point([-1, 1, 0]), &to_point([0, 0, 1]));
        assert_eq!(b.0, [-1, 0, 0, 4].map(Rational::from_int));
        let b = restrict_to_line(&cubic("x1^3"), &to_point([0, 1, 0]), &to_point([0, 0, 1]));
        assert!(b.is_zero());
    }

    #[test]
    fn binary_roots() {
        for method in [RootMethod::Companion, RootMethod::Cardano] {
            // −X1³ + 4X2³
            let b = BinaryCubic([-1, 0, 0, 4].map(Rational::from_int));
            let pairs = factor_binary_cubic(&b, method).unwrap();
            for (a1, a2) in pairs {
                let r = -a2 / a1;
                assert!((r.powu(3) - Complex64::new(4.0, 0.0)).norm() < 1e-12);
            }
            // X1 X2 (X1 + X2) and a triple root
            for coeffs in [[0, 1, 1, 0], [1, 3, 3, 1], [1, -1, -1, 1], [0, 0, 0, 5]] {
                let b = BinaryCubic(coeffs.map(Rational::from_int));
                let pairs = factor_binary_cubic(&b, method).unwrap();
                for x in [(0.3, 1.1), (-2.0, 0.7)] {
                    let (x1, x2) = (Complex64::new(x.0, 0.0), Complex64::new(x.1, 0.0));
                    let prod: Complex64 = pairs.iter().map(|(a, b)| a * x1 + b * x2).product();
                    assert!((prod - b.eval(x1, x2)).norm() < 1e-12, "{coeffs:?}");
                }
            }
        }
        assert_eq!(factor_binary_cubic(&BinaryCubic([0, 0, 0, 0].map(Rational::from_int)), RootMethod::Companion), Err(Error::ZeroBinaryCubic));
    }

    #[test]
    fn generic_recipe_on_example() {
        let f = cubic(EXAMPLE);
        let r = factor_generic(&f).unwrap();
        assert!(r.residual < 1e-12);
        assert_eq!(r.method, Method::Generic);
        // a second admissible u gives the same lines
        let opts = FactorOptions::default();
        let other = generic_at(&f, [1, 1, 0], &Rational::from_int(-432), &opts).unwrap();
        assert!(r.same_lines(&other, 1e-9));
        // one factor is real: cube roots of 2 and 4 as in Cardano's formula
        let alpha = 2f64.cbrt() + 4f64.cbrt();
        let want = ComplexLine::real([3.0 * (alpha * alpha - 2.0), -6.0 * (3.0 + 2.0 * alpha), 6.0 * (1.0 + alpha) * (2.0 + alpha)]);
        assert!(r.factors.iter().any(|l| l.distance_projective(&want) < 1e-9));
    }

    #[test]
    fn coordinate_triangle() {
        let r = factor(&cubic("x1 x2 x3")).unwrap();
        let ex = r.exact.unwrap();
        assert_eq!(ex.scalar, Rational::ONE);
        assert_eq!(ex.factors, [cubic_line("x3"), cubic_line("x2"), cubic_line("x1")]);
    }

    fn cubic_line(s: &str) -> LinearForm {
        LinearForm::parse(s).unwrap()
    }

    #[test]
    fn singular_examples() {
        let r = factor_singular(&cubic("x1^2 x2")).unwrap();
        assert_eq!(apex(&cubic("x1^2 x2")).unwrap(), to_point([0, 0, 1]));
        let ex = r.exact.unwrap();
        assert_eq!(ex.factors, [cubic_line("x2"), cubic_line("x1"), cubic_line("x1")]);

        let r = factor_singular(&cubic("x1^3")).unwrap();
        assert!(r.factors.iter().all(|l| *l == ComplexLine::real([1.0, 0.0, 0.0])));

        let r = factor_singular(&cubic("2x1^3 + 12x1 x2^2")).unwrap();
        let s6 = 6f64.sqrt();
        for want in [
            ComplexLine::real([1.0, 0.0, 0.0]),
            ComplexLine([Complex64::new(1.0, 0.0), Complex64::new(0.0, s6), Complex64::new(0.0, 0.0)]),
            ComplexLine([Complex64::new(1.0, 0.0), Complex64::new(0.0, -s6), Complex64::new(0.0, 0.0)]),
        ] {
            assert!(r.factors.iter().any(|l| l.distance_projective(&want) < 1e-12));
        }
        assert_eq!(factor_singular(&cubic(EXAMPLE)).unwrap_err(), Error::NotSingular);
    }

    #[test]
    fn paths_agree_on_concurrent_lines() {
        let f = cubic("x1^2 x2 + x1 x2^2");
        let g = factor_generic(&f).unwrap();
        let s = factor_singular(&f).unwrap();
        assert!(g.same_lines(&s, 1e-8));
    }

    #[test]
    fn two_cube_examples() {
        let t = two_cubes(&cubic("2x1^3 + 12x1 x2^2")).unwrap();
        let s2 = 2f64.sqrt();
        let plus = ComplexLine::real([1.0, s2, 0.0]);
        let minus = ComplexLine::real([1.0, -s2, 0.0]);
        assert!(t.a.distance_projective(&minus) < 1e-12 || t.a.distance_projective(&plus) < 1e-12);
        assert!(t.residual < 1e-12);
        let t = two_cubes(&cubic("x1^3 + x2^3")).unwrap();
        assert!(t.residual < 1e-14);
        assert!((t.a0 - 1.0).norm() < 1e-12 && (t.b0 - 1.0).norm() < 1e-12);
        assert!(matches!(two_cubes(&cubic(EXAMPLE)), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn tangent_degenerates_at_zero_weights() {
        let f = cubic(EXAMPLE);
        let zero = Complex64::new(0.0, 0.0);
        assert!(matches!(
            tangent_line(&f, &to_point([1, 0, 0]), &to_point([0, 1, 0]), zero, zero),
            Err(Error::DegenerateTangent(_))
        ));
    }

    #[test]
    fn irreducible_is_rejected() {
        assert_eq!(factor(&cubic("x1^2 x2 + x1 x3^2")).unwrap_err(), Error::NotReducible);
        assert!(matches!(factor_generic(&cubic("x1 x2^2")), Err(Error::PreconditionViolated(_))));
    }
}
