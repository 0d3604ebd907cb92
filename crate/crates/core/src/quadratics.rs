//! Ternary quadratic forms: reducibility, squares, sums of squares and
//! factoring into linear forms.

use num_complex::Complex64;
use serde::Serialize;

use crate::calculus::{transvectant, ux};
use crate::error::{Error, Result};
use crate::forms::{LinearForm, QuadraticForm};
use crate::numeric::{canonicalize, relative_residual, serialize_complex, ComplexLine, TAU_FAC};
use crate::poly::Poly;
use crate::rational::Rational;

/// `Σ scalar · line²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SquaresDecomposition {
    pub terms: Vec<(Rational, LinearForm)>,
}

impl SquaresDecomposition {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn recombine(&self) -> Poly {
        let parts: Vec<Poly> = self
            .terms
            .iter()
            .map(|(c, l)| l.to_poly().pow(2).scale(c))
            .collect();
        Poly::sum(&parts)
    }
}

/// Two linear factors of a reducible quadratic.
#[derive(Debug, Clone, Serialize)]
pub struct QuadraticFactors {
    #[serde(serialize_with = "serialize_complex")]
    pub scalar: Complex64,
    pub factors: [ComplexLine; 2],
    /// Present when both factors have rational coefficients.
    pub exact: Option<(Rational, LinearForm, LinearForm)>,
    pub residual: f64,
}

/// `q = a·b + c0·c²`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TangentSplit {
    pub b: LinearForm,
    pub c0: Rational,
    pub c: LinearForm,
}

/// Points tried, in order, when a point with `f_yy ≠ 0` is needed. Any
/// nonzero quadratic is nonzero at one of them.
const SCAN: [[i64; 3]; 6] = [[0, 0, 1], [1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 0, 1], [0, 1, 1]];

fn scan_point(q: &QuadraticForm) -> Option<([Rational; 3], Rational)> {
    SCAN.iter().find_map(|p| {
        let y = p.map(Rational::from_int);
        let v = q.eval(&y);
        (!v.is_zero()).then_some((y, v))
    })
}

/// The polar `f_xy` of a quadratic at a rational point.
fn polar_at(q: &QuadraticForm, y: &[Rational; 3]) -> LinearForm {
    // f_xy = Σ_i y_i ∂f/∂x_i, read off the coefficient matrix
    let c = |i: u8, j: u8| q.coeff(&[i, j]);
    let row = |i: u8| {
        let mut s = Rational::ZERO;
        for j in 1..=3u8 {
            let w = if i == j { &c(i, i) * &Rational::from_int(2) } else { c(i, j) };
            s += &(&w * &y[j as usize - 1]);
        }
        s
    };
    LinearForm::new([row(1), row(2), row(3)])
}

/// `J²[q,q,q]`: zero exactly when `q` is a product of two linear forms.
pub fn quad_discriminant(q: &QuadraticForm) -> Rational {
    let c = |s: [u8; 2]| q.coeff(&s);
    let (f11, f12, f13, f22, f23, f33) = (c([1, 1]), c([1, 2]), c([1, 3]), c([2, 2]), c([2, 3]), c([3, 3]));
    let four = Rational::from_int(4);
    let mut s = &(&(&four * &f11) * &f22) * &f33;
    s += &(&(&f12 * &f23) * &f13);
    s -= &(&(&f23 * &f23) * &f11);
    s -= &(&(&f13 * &f13) * &f22);
    s -= &(&(&f12 * &f12) * &f33);
    &s * &Rational::from_int(12)
}

/// `J²[q,q,u²]` as a polynomial in `u`; zero exactly when `q` is a multiple
/// of a square.
pub fn square_test(q: &QuadraticForm) -> Poly {
    let p = q.to_poly();
    transvectant(2, &p, &p, &ux().pow(2)).expect("order 2")
}

/// The three-equation square test valid when `f33 ≠ 0`.
pub fn square_shortcut(q: &QuadraticForm) -> Option<bool> {
    let c = |s: [u8; 2]| q.coeff(&s);
    let f33 = c([3, 3]);
    if f33.is_zero() {
        return None;
    }
    let four = Rational::from_int(4);
    let two = Rational::from_int(2);
    let e1 = &(&(&four * &c([1, 1])) * &f33) - &(&c([1, 3]) * &c([1, 3]));
    let e2 = &(&(&two * &c([1, 2])) * &f33) - &(&c([1, 3]) * &c([2, 3]));
    let e3 = &(&(&four * &c([2, 2])) * &f33) - &(&c([2, 3]) * &c([2, 3]));
    Some(e1.is_zero() && e2.is_zero() && e3.is_zero())
}

/// `q = scalar · line²` with the line normalized to leading coefficient 1.
pub fn extract_square(q: &QuadraticForm) -> Result<(Rational, LinearForm)> {
    if q.is_zero() {
        return Err(Error::ZeroForm);
    }
    if !square_test(q).is_zero() {
        return Err(Error::NotASquare);
    }
    Ok(square_from_point(q))
}

/// `f = f_xy²/(4 f_yy)` at the first scan point with `f_yy ≠ 0`. Only valid
/// for a nonzero multiple of a square. With `y = (0,0,1)` this is the
/// `f33 ≠ 0` formula.
fn square_from_point(q: &QuadraticForm) -> (Rational, LinearForm) {
    let (y, fyy) = scan_point(q).expect("nonzero quadratic");
    let line = polar_at(q, &y);
    let (lead, n) = line.normalized();
    let scale = &(&lead * &lead) * &(&Rational::from_int(4) * &fyy).recip();
    (scale, n)
}

/// Writes `q` as a sum of `rank(q)` squares with rational scalars, using the
/// recursion `g = 4 f_yy f − f_xy²`, which lowers the rank by one.
pub fn sum_of_squares(q: &QuadraticForm) -> SquaresDecomposition {
    let mut terms = Vec::new();
    let mut current = q.clone();
    let mut weight = Rational::ONE;
    while !current.is_zero() {
        let (y, fyy) = scan_point(&current).expect("nonzero quadratic");
        let line = polar_at(&current, &y);
        let inv = (&Rational::from_int(4) * &fyy).recip();
        let (lead, n) = line.normalized();
        terms.push((&(&weight * &inv) * &(&lead * &lead), n));
        let g = current
            .to_poly()
            .scale(&(&Rational::from_int(4) * &fyy))
            .sub(&line.to_poly().pow(2));
        current = QuadraticForm::from_poly(&g).expect("quadratic");
        weight = &weight * &inv;
    }
    SquaresDecomposition { terms }
}

fn line_mul(a: &LinearForm, b: &LinearForm) -> Poly {
    a.to_poly().mul(&b.to_poly())
}

/// Factors a reducible quadratic into two linear forms.
pub fn factor_quadratic(q: &QuadraticForm) -> Result<QuadraticFactors> {
    if q.is_zero() {
        return Err(Error::ZeroForm);
    }
    if !quad_discriminant(q).is_zero() {
        return Err(Error::Irreducible);
    }
    let squares = sum_of_squares(q);
    let target: Vec<Rational> = q.coeffs().to_vec();
    let (scalar, factors, exact) = match squares.terms.as_slice() {
        [(c, l)] => {
            let line = ComplexLine::from_rational(l);
            (complex(c), [line, line], Some((c.clone(), l.clone(), l.clone())))
        }
        [(c1, l1), (c2, l2)] => {
            // c1 (l1² + r l2²) = c1 (l1 + s l2)(l1 − s l2) with s² = −r
            let r = -(c2 * &c1.recip());
            match r.sqrt_exact() {
                Some(s) => {
                    let a = LinearForm::from_poly(&l1.to_poly().add(&l2.to_poly().scale(&s))).expect("linear");
                    let b = LinearForm::from_poly(&l1.to_poly().sub(&l2.to_poly().scale(&s))).expect("linear");
                    debug_assert_eq!(line_mul(&a, &b).scale(c1), q.to_poly());
                    let fa = ComplexLine::from_rational(&a);
                    let fb = ComplexLine::from_rational(&b);
                    (complex(c1), [fa, fb], Some((c1.clone(), a, b)))
                }
                None => {
                    let s = Complex64::new(r.to_f64(), 0.0).sqrt();
                    let (p, m) = (ComplexLine::from_rational(l1), ComplexLine::from_rational(l2));
                    let a = ComplexLine([0, 1, 2].map(|i| p.0[i] + s * m.0[i]));
                    let b = ComplexLine([0, 1, 2].map(|i| p.0[i] - s * m.0[i]));
                    (complex(c1), [a, b], None)
                }
            }
        }
        _ => unreachable!("a reducible quadratic has rank at most two"),
    };
    let (scalar, lines) = canonicalize(scalar, &factors);
    let factors = [lines[0], lines[1]];
    let residual = relative_residual(scalar, &factors, &target);
    if residual > TAU_FAC {
        return Err(Error::ResidualTooLarge {
            residual,
            tolerance: TAU_FAC,
        });
    }
    let exact = exact.map(|(c, a, b)| {
        let (ka, a) = a.normalized();
        let (kb, b) = b.normalized();
        let (a, b) = if ComplexLine::from_rational(&a).canonical_cmp(&ComplexLine::from_rational(&b)).is_gt() {
            (b, a)
        } else {
            (a, b)
        };
        (&(&c * &ka) * &kb, a, b)
    });
    Ok(QuadraticFactors {
        scalar,
        factors,
        exact,
        residual,
    })
}

fn complex(c: &Rational) -> Complex64 {
    Complex64::new(c.to_f64(), 0.0)
}

/// `J²[q,q,a²]` as an exact scalar.
pub fn tangent_test(q: &QuadraticForm, a: &LinearForm) -> Rational {
    let p = q.to_poly();
    let t = transvectant(2, &p, &p, &a.to_poly().pow(2)).expect("order 2");
    t.constant_term()
}

/// Writes `q = a·b + c0·c²` for the given line `a`; possible exactly when
/// `J²[q,q,a²] = 0`.
pub fn tangent_split(q: &QuadraticForm, a: &LinearForm) -> Result<TangentSplit> {
    if a.is_zero() {
        return Err(Error::ZeroLine);
    }
    if !tangent_test(q, a).is_zero() {
        return Err(Error::NoSplit("J2[q,q,a^2] is nonzero".into()));
    }
    let coeffs = a.triple();
    let k = coeffs.iter().position(|c| !c.is_zero()).expect("nonzero line");
    let mut y = [Rational::ZERO, Rational::ZERO, Rational::ZERO];
    y[k] = Rational::ONE;
    let ay = coeffs[k].clone();
    let fyy = q.eval(&y);
    let fxy = polar_at(q, &y).to_poly();
    let ax = a.to_poly();
    // g = a_x² f_yy − a_x a_y f_xy + a_y² f_xx is a multiple of a square
    let g = ax
        .pow(2)
        .scale(&fyy)
        .sub(&ax.mul(&fxy).scale(&ay))
        .add(&q.to_poly().scale(&(&ay * &ay)));
    let inv = (&ay * &ay).recip();
    // f = a_x (a_y f_xy − a_x f_yy)/a_y² + g/a_y²
    let b = fxy.scale(&ay).sub(&ax.scale(&fyy)).scale(&inv);
    let b = LinearForm::from_poly(&b).expect("linear");
    let gq = QuadraticForm::from_poly(&g).expect("quadratic");
    let (c0, c) = if gq.is_zero() {
        (Rational::ZERO, LinearForm::from_ints([0, 0, 0]))
    } else {
        let (s, c) = square_from_point(&gq);
        (&s * &inv, c)
    };
    debug_assert_eq!(
        a.to_poly().mul(&b.to_poly()).add(&c.to_poly().pow(2).scale(&c0)),
        q.to_poly()
    );
    Ok(TangentSplit { b, c0, c })
}
