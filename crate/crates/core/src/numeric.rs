//! Complex linear forms and product expansion for the numeric factor stages.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::forms::{subscripts, LinearForm};
use crate::rational::Rational;

/// Relative tolerance for binary-cubic roots.
pub const TAU_ROOT: f64 = 1e-10;
/// Relative tolerance for a recombined factorization.
pub const TAU_FAC: f64 = 1e-8;

/// Linear form `l1 x1 + l2 x2 + l3 x3` with complex coefficients.
#[derive(Clone, Copy, PartialEq)]
pub struct ComplexLine(pub [Complex64; 3]);

impl ComplexLine {
    pub fn from_rational(l: &LinearForm) -> Self {
        ComplexLine(l.triple().map(|c| Complex64::new(c.to_f64(), 0.0)))
    }

    pub fn real(c: [f64; 3]) -> Self {
        ComplexLine(c.map(|r| Complex64::new(r, 0.0)))
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_negligible(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    /// `self = scale · line` with the first coefficient that is not
    /// negligible relative to the largest set to 1.
    pub fn normalized(&self) -> (Complex64, ComplexLine) {
        let m = self.max_abs();
        if m == 0.0 {
            return (Complex64::new(1.0, 0.0), *self);
        }
        let lead = *self
            .0
            .iter()
            .find(|c| c.norm() > 1e-12 * m)
            .expect("nonzero line has a leading coefficient");
        let mut out = self.0.map(|c| c / lead);
        for c in &mut out {
            snap(c, 1e-13);
        }
        (lead, ComplexLine(out))
    }

    pub fn eval(&self, p: &[Complex64; 3]) -> Complex64 {
        self.0[0] * p[0] + self.0[1] * p[1] + self.0[2] * p[2]
    }

    /// Ordering key: real and imaginary parts rounded to 12 digits.
    fn key(&self) -> [i64; 6] {
        let r = |v: f64| (v * 1e12).round() as i64;
        [
            r(self.0[0].re),
            r(self.0[0].im),
            r(self.0[1].re),
            r(self.0[1].im),
            r(self.0[2].re),
            r(self.0[2].im),
        ]
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }

    /// Distance to another line after normalizing both.
    pub fn distance_projective(&self, other: &Self) -> f64 {
        let (_, a) = self.normalized();
        let (_, b) = other.normalized();
        (0..3).map(|i| (a.0[i] - b.0[i]).norm()).fold(0.0, f64::max)
    }
}

fn snap(c: &mut Complex64, tol: f64) {
    if c.re.abs() < tol {
        c.re = 0.0;
    }
    if c.im.abs() < tol {
        c.im = 0.0;
    }
}

fn fmt_complex(c: Complex64) -> String {
    let r = |v: f64| {
        let s = format!("{:.12}", v);
        let s = s.trim_end_matches('0').trim_end_matches('.').to_string();
        if s == "-0" {
            "0".to_string()
        } else {
            s
        }
    };
    match (c.re == 0.0, c.im == 0.0) {
        (_, true) => r(c.re),
        (true, false) => format!("{}i", r(c.im)),
        _ => format!("({}{}{}i)", r(c.re), if c.im < 0.0 { "" } else { "+" }, r(c.im)),
    }
}

impl fmt::Display for ComplexLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            if c.norm() == 0.0 {
                continue;
            }
            parts.push(format!("{}*x{}", fmt_complex(*c), i + 1));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for ComplexLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as `[[re, im], [re, im], [re, im]]`.
impl Serialize for ComplexLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(3))?;
        for c in &self.0 {
            seq.serialize_element(&[c.re, c.im])?;
        }
        seq.end()
    }
}

pub fn serialize_complex<S: Serializer>(c: &Complex64, s: S) -> std::result::Result<S::Ok, S::Error> {
    [c.re, c.im].serialize(s)
}

/// Coefficients of `scale · ∏ lines` in the order of `subscripts(lines.len())`.
pub fn expand_product(scale: Complex64, lines: &[ComplexLine]) -> Vec<Complex64> {
    let d = lines.len();
    let subs = subscripts(d);
    let mut out = vec![Complex64::new(0.0, 0.0); subs.len()];
    let mut idx = vec![0usize; d];
    loop {
        let mut term = scale;
        for (k, &i) in idx.iter().enumerate() {
            term *= lines[k].0[i];
        }
        let mut sub: Vec<u8> = idx.iter().map(|&i| i as u8 + 1).collect();
        sub.sort_unstable();
        let pos = subs.iter().position(|s| *s == sub).expect("subscript");
        out[pos] += term;
        // odometer
        let mut k = 0;
        loop {
            if k == d {
                return out;
            }
            idx[k] += 1;
            if idx[k] < 3 {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Max-norm of `scale · ∏ lines − target`, relative to the max-norm of
/// `target`.
pub fn relative_residual(scale: Complex64, lines: &[ComplexLine], target: &[Rational]) -> f64 {
    let got = expand_product(scale, lines);
    let norm = target.iter().map(|c| c.to_f64().abs()).fold(0.0, f64::max);
    let diff = got
        .iter()
        .zip(target)
        .map(|(g, t)| (g - Complex64::new(t.to_f64(), 0.0)).norm())
        .fold(0.0, f64::max);
    if norm == 0.0 {
        diff
    } else {
        diff / norm
    }
}

/// Normalizes each line, folds the scales into `scale`, and sorts the lines
/// canonically.
pub fn canonicalize(scale: Complex64, lines: &[ComplexLine]) -> (Complex64, Vec<ComplexLine>) {
    let mut s = scale;
    let mut out: Vec<ComplexLine> = lines
        .iter()
        .map(|l| {
            let (k, n) = l.normalized();
            s *= k;
            n
        })
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    let tol = 1e-13 * s.norm().max(1.0);
    snap(&mut s, tol);
    (s, out)
}

/// Whether two lists of lines agree as multisets up to normalization.
pub fn same_lines(a: &[ComplexLine], b: &[ComplexLine], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    'outer: for x in a {
        for (j, y) in b.iter().enumerate() {
            if !used[j] && x.distance_projective(y) <= tol {
                used[j] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expand_two_lines() {
        // (x1 + x2)(x1 - x2) = x1^2 - x2^2
        let a = ComplexLine::real([1.0, 1.0, 0.0]);
        let b = ComplexLine::real([1.0, -1.0, 0.0]);
        let c = expand_product(Complex64::new(1.0, 0.0), &[a, b]);
        let subs = subscripts(2);
        for (s, v) in subs.iter().zip(&c) {
            let want = match s.as_slice() {
                [1, 1] => 1.0,
                [2, 2] => -1.0,
                _ => 0.0,
            };
            assert!((v.re - want).abs() < 1e-15 && v.im == 0.0, "{s:?}");
        }
    }

    #[test]
    fn normalization_and_order() {
        let lines = [
            ComplexLine::real([0.0, 2.0, 4.0]),
            ComplexLine::real([3.0, 0.0, 0.0]),
        ];
        let (s, out) = canonicalize(Complex64::new(1.0, 0.0), &lines);
        assert_eq!(s, Complex64::new(6.0, 0.0));
        assert_eq!(out[0], ComplexLine::real([0.0, 1.0, 2.0]));
        assert_eq!(out[1], ComplexLine::real([1.0, 0.0, 0.0]));
    }
}
