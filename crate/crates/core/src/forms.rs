//! Coefficient records for linear, quadratic and cubic ternary forms.
//!
//! Coefficients are labeled by ascending subscripts: the coefficient of
//! `x1^i x2^j x3^k` is the symbol whose subscript lists `1` i times, `2` j
//! times and `3` k times (`f_xxx = f111 x1^3 + f112 x1^2 x2 + ...`).

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::parse::parse;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::var::{triple, Family, VarId};

/// Subscripts of a degree-`d` ternary form in display order
/// (`11, 12, 22, 13, 23, 33` for quadratics).
pub fn subscripts(d: usize) -> Vec<Vec<u8>> {
    match d {
        1 => vec![vec![1], vec![2], vec![3]],
        2 => vec![
            vec![1, 1],
            vec![1, 2],
            vec![2, 2],
            vec![1, 3],
            vec![2, 3],
            vec![3, 3],
        ],
        3 => vec![
            vec![1, 1, 1],
            vec![1, 1, 2],
            vec![1, 2, 2],
            vec![2, 2, 2],
            vec![1, 1, 3],
            vec![1, 2, 3],
            vec![2, 2, 3],
            vec![1, 3, 3],
            vec![2, 3, 3],
            vec![3, 3, 3],
        ],
        _ => {
            let mut out = Vec::new();
            let mut cur = vec![1u8; d];
            loop {
                out.push(cur.clone());
                // next nondecreasing sequence
                let Some(i) = (0..d).rev().find(|&i| cur[i] < 3) else {
                    break;
                };
                let v = cur[i] + 1;
                for c in cur.iter_mut().skip(i) {
                    *c = v;
                }
            }
            out
        }
    }
}

/// Monomial in the given triple family for a subscript list.
pub fn subscript_monomial(sub: &[u8], var: Family) -> Monomial {
    let v = triple(var);
    Monomial::from_pairs(sub.iter().map(|&i| (v[i as usize - 1], 1)))
}

/// The generic form of degree `d` in `var` with coefficient symbols from
/// `coeff`, e.g. `generic_form(Family::F, Family::X, 3)` is `f_xxx`.
pub fn generic_form(coeff: Family, var: Family, d: usize) -> Poly {
    Poly::from_terms(subscripts(d).into_iter().map(|s| {
        let m = subscript_monomial(&s, var).mul(&Monomial::var(VarId::coeff(coeff, &s)));
        (m, Rational::ONE)
    }))
}

/// The generic cubic `f_xxx` in the coefficient symbols `f111 … f333`.
pub fn generic_cubic() -> Poly {
    generic_form(Family::F, Family::X, 3)
}

/// Extracts the coefficients of a form homogeneous of degree `d` in x. The
/// coefficients may themselves be polynomials in other variables.
pub fn coefficients(p: &Poly, d: usize) -> Result<Vec<Poly>> {
    let (deg, homog) = p.degree_in(Family::X);
    if !p.is_zero() && (!homog || deg as usize != d) {
        return Err(Error::DegreeMismatch(format!(
            "expected a form of degree {d} in x"
        )));
    }
    let by_x: FxHashMap<Monomial, Poly> = p
        .coefficients_in_families(&[Family::X])
        .into_iter()
        .collect();
    Ok(subscripts(d)
        .iter()
        .map(|s| {
            by_x.get(&subscript_monomial(s, Family::X))
                .cloned()
                .unwrap_or_default()
        })
        .collect())
}

/// Bindings sending the coefficient symbols `coeff_s` of the generic
/// degree-`d` form to the coefficients of `p`. Substituting these into a
/// generic concomitant evaluates it at `p`.
pub fn coefficient_bindings(p: &Poly, coeff: Family, d: usize) -> Result<FxHashMap<VarId, Poly>> {
    let cs = coefficients(p, d)?;
    Ok(subscripts(d)
        .into_iter()
        .zip(cs)
        .map(|(s, c)| (VarId::coeff(coeff, &s), c))
        .collect())
}

fn rational_coeffs(p: &Poly, d: usize) -> Result<Vec<Rational>> {
    coefficients(p, d)?
        .into_iter()
        .map(|c| {
            c.as_constant().ok_or_else(|| {
                Error::DegreeMismatch("coefficients must be rational numbers".into())
            })
        })
        .collect()
}

fn poly_from(coeffs: &[Rational], d: usize) -> Poly {
    Poly::from_terms(
        subscripts(d)
            .iter()
            .zip(coeffs)
            .map(|(s, c)| (subscript_monomial(s, Family::X), c.clone())),
    )
}

macro_rules! form_type {
    ($name:ident, $deg:expr, $n:expr) => {
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            coeffs: [Rational; $n],
        }

        impl $name {
            pub const DEGREE: usize = $deg;

            pub fn new(coeffs: [Rational; $n]) -> Self {
                $name { coeffs }
            }

            pub fn from_ints(c: [i64; $n]) -> Self {
                $name {
                    coeffs: c.map(Rational::from_int),
                }
            }

            pub fn from_poly(p: &Poly) -> Result<Self> {
                let v = rational_coeffs(p, $deg)?;
                Ok($name {
                    coeffs: v.try_into().expect("coefficient count"),
                })
            }

            pub fn parse(text: &str) -> Result<Self> {
                Self::from_poly(&parse(text)?)
            }

            pub fn to_poly(&self) -> Poly {
                poly_from(&self.coeffs, $deg)
            }

            /// Coefficients in display order.
            pub fn coeffs(&self) -> &[Rational; $n] {
                &self.coeffs
            }

            /// Coefficient for a subscript in any digit order.
            pub fn coeff(&self, sub: &[u8]) -> Rational {
                let mut s = sub.to_vec();
                s.sort_unstable();
                let i = subscripts($deg)
                    .iter()
                    .position(|t| *t == s)
                    .expect("subscript of the right length");
                self.coeffs[i].clone()
            }

            pub fn is_zero(&self) -> bool {
                self.coeffs.iter().all(Rational::is_zero)
            }

            pub fn max_abs(&self) -> f64 {
                self.coeffs.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(&self.to_poly(), f)
            }
        }

        /// Serialized as the rendered polynomial text.
        impl serde::Serialize for $name {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                fmt::Display::fmt(self, f)
            }
        }
    };
}

form_type!(LinearForm, 1, 3);
form_type!(QuadraticForm, 2, 6);
form_type!(CubicForm, 3, 10);

impl LinearForm {
    pub fn triple(&self) -> [Rational; 3] {
        self.coeffs.clone()
    }

    /// Splits off the first nonzero coefficient: `self = scale · line` with
    /// the leading coefficient of `line` equal to 1. Zero stays zero with
    /// scale 1.
    pub fn normalized(&self) -> (Rational, LinearForm) {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            None => (Rational::ONE, self.clone()),
            Some(lead) => {
                let inv = lead.recip();
                (lead.clone(), LinearForm::new(self.coeffs.clone().map(|c| &c * &inv)))
            }
        }
    }
}

impl QuadraticForm {
    /// Value `f_yy` at a rational point.
    pub fn eval(&self, y: &[Rational; 3]) -> Rational {
        let mut s = Rational::ZERO;
        for (sub, c) in subscripts(2).iter().zip(&self.coeffs) {
            let t = sub
                .iter()
                .fold(c.clone(), |acc, &i| &acc * &y[i as usize - 1]);
            s += &t;
        }
        s
    }
}

impl CubicForm {
    /// Value `f_yyy` at a rational point.
    pub fn eval(&self, y: &[Rational; 3]) -> Rational {
        let mut s = Rational::ZERO;
        for (sub, c) in subscripts(3).iter().zip(&self.coeffs) {
            let t = sub
                .iter()
                .fold(c.clone(), |acc, &i| &acc * &y[i as usize - 1]);
            s += &t;
        }
        s
    }

    /// Symmetric trilinear form `T(p,q,r)` with `T(x,x,x) = f_xxx`.
    pub fn trilinear(&self, p: &[Rational; 3], q: &[Rational; 3], r: &[Rational; 3]) -> Rational {
        let mut s = Rational::ZERO;
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let t = self.tensor(i, j, k);
                    if !t.is_zero() {
                        s += &(&(&(&t * &p[i]) * &q[j]) * &r[k]);
                    }
                }
            }
        }
        s
    }

    /// Linear form `x ↦ T(x,p,q)`.
    pub fn trilinear_line(&self, p: &[Rational; 3], q: &[Rational; 3]) -> LinearForm {
        let e = |i: usize| {
            let mut v = [Rational::ZERO, Rational::ZERO, Rational::ZERO];
            v[i] = Rational::ONE;
            v
        };
        LinearForm::new([0, 1, 2].map(|i| self.trilinear(&e(i), p, q)))
    }

    fn tensor(&self, i: usize, j: usize, k: usize) -> Rational {
        let mut sub = [i as u8 + 1, j as u8 + 1, k as u8 + 1];
        sub.sort_unstable();
        let perms = if sub[0] == sub[2] {
            1
        } else if sub[0] == sub[1] || sub[1] == sub[2] {
            3
        } else {
            6
        };
        &self.coeff(&sub) * &Rational::new(1, perms)
    }

    /// Bindings `f_ijk ↦ coefficient` for evaluating generic concomitants.
    pub fn bindings(&self) -> FxHashMap<VarId, Poly> {
        subscripts(3)
            .into_iter()
            .zip(self.coeffs.iter())
            .map(|(s, c)| (VarId::coeff(Family::F, &s), Poly::constant(c.clone())))
            .collect()
    }
}

/// Rational point as a map for exact evaluation of a polynomial in `family`.
pub fn point(family: Family, p: &[Rational; 3]) -> FxHashMap<VarId, Rational> {
    triple(family).into_iter().zip(p.iter().cloned()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generic_cubic_has_ten_terms() {
        let f = generic_cubic();
        assert_eq!(f.term_count(), 10);
        assert_eq!(f.degree_in(Family::X), (3, true));
        assert_eq!(f.degree_in(Family::F), (1, true));
        let d1 = f.derive(VarId::x(1));
        assert_eq!(d1.term_count(), 6);
    }

    #[test]
    fn round_trip_cubic() {
        let f = CubicForm::parse("x1^3 - 6 x1 x2^2 - 6 x2^3 + 6 x1^2 x3 + 18 x1 x2 x3 + 12 x2^2 x3 + 4 x3^3")
            .unwrap();
        assert_eq!(f.coeff(&[3, 2, 1]), Rational::from_int(18));
        assert_eq!(f.coeff(&[3, 3, 3]), Rational::from_int(4));
        assert_eq!(CubicForm::from_poly(&f.to_poly()).unwrap(), f);
        assert!(CubicForm::parse("x1^2").is_err());
        assert!(CubicForm::parse("x1^3 + u1 x2^3").is_err());
    }

    #[test]
    fn quartic_subscripts() {
        assert_eq!(subscripts(4).len(), 15);
    }
}
