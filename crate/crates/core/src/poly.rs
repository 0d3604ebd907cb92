//! Sparse multivariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::Rational;
use crate::var::{Family, VarId};

/// A polynomial in canonical form: terms sorted by strictly decreasing
/// monomial, no zero coefficients. Structural equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::ONE)
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Rational::ONE, Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    /// Collects arbitrary terms into canonical form.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in terms {
            accumulate(&mut acc, m, &c);
        }
        Self::from_map(acc)
    }

    pub(crate) fn from_map(acc: FxHashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<(Monomial, Rational)> =
            acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Wraps terms that are already sorted descending with no zero
    /// coefficients and no repeated monomials.
    pub(crate) fn from_sorted_unchecked(terms: Vec<(Monomial, Rational)>) -> Self {
        let p = Poly { terms };
        debug_assert!(p.is_canonical());
        p
    }

    fn is_canonical(&self) -> bool {
        self.terms.iter().all(|t| !t.1.is_zero())
            && self.terms.windows(2).all(|w| w[0].0 > w[1].0)
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Rational)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The constant value if this polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        match self.terms.binary_search_by(|t| m.cmp(&t.0)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::ZERO,
        }
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|t| t.0.degree()).max().unwrap_or(0)
    }

    /// Degree in the given family, with a flag telling whether every term
    /// has that same degree. The zero polynomial reports `(0, true)`.
    pub fn degree_in(&self, family: Family) -> (u32, bool) {
        let mut it = self.terms.iter().map(|t| t.0.degree_in(family));
        let Some(first) = it.next() else {
            return (0, true);
        };
        let (mut max, mut homog) = (first, true);
        for d in it {
            homog &= d == first;
            max = max.max(d);
        }
        (max, homog)
    }

    /// Sorted list of variables occurring in the polynomial.
    pub fn variables(&self) -> Vec<VarId> {
        let mut vs: Vec<VarId> = self
            .terms
            .iter()
            .flat_map(|t| t.0.pairs().iter().map(|p| p.0))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by a monomial; term order is preserved.
    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, k)| (n.mul(m), k * c)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        merge(self, other, false)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        merge(self, other, true)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let (small, big) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.terms.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_monomial(m, c);
        }
        let mut acc: FxHashMap<Monomial, Rational> =
            FxHashMap::with_capacity_and_hasher(big.terms.len() * 2, Default::default());
        for (m1, c1) in &small.terms {
            for (m2, c2) in &big.terms {
                accumulate(&mut acc, m1.mul(m2), &(c1 * c2));
            }
        }
        Poly::from_map(acc)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Sum of many polynomials with a single accumulation pass.
    pub fn sum<'a>(parts: impl IntoIterator<Item = &'a Poly>) -> Poly {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for p in parts {
            for (m, c) in &p.terms {
                accumulate(&mut acc, m.clone(), c);
            }
        }
        Poly::from_map(acc)
    }

    /// Formal partial derivative.
    pub fn derive(&self, v: VarId) -> Poly {
        // lowering one variable in every term that contains it preserves the
        // monomial order and keeps monomials distinct
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                m.lower(v)
                    .map(|(e, lm)| (lm, c * &Rational::from_int(e as i64)))
            })
            .collect();
        Poly::from_sorted_unchecked(terms)
    }

    /// Repeated partial derivative `∂^e1/∂v1^e1 ...`.
    pub fn derive_multi(&self, orders: &[(VarId, u32)]) -> Poly {
        let mut p = self.clone();
        for &(v, e) in orders {
            for _ in 0..e {
                if p.is_zero() {
                    return p;
                }
                p = p.derive(v);
            }
        }
        p
    }

    /// Views the polynomial as a polynomial in the variables selected by
    /// `keep`, with coefficients in the remaining variables. Keys are the
    /// selected-variable monomials.
    pub fn coefficients_in(&self, keep: impl Fn(VarId) -> bool) -> Vec<(Monomial, Poly)> {
        let mut groups: FxHashMap<Monomial, Vec<(Monomial, Rational)>> = FxHashMap::default();
        for (m, c) in &self.terms {
            let (k, rest) = m.split(&keep);
            groups.entry(k).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<(Monomial, Poly)> = groups
            .into_iter()
            .map(|(k, ts)| {
                // the rest-parts inherit the order of the full monomials only
                // within equal keys of equal degree, so re-sort
                let mut ts = ts;
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (k, Poly::from_sorted_unchecked(ts))
            })
            .collect();
        out.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        out
    }

    /// Coefficients with respect to the variables of the listed families.
    pub fn coefficients_in_families(&self, families: &[Family]) -> Vec<(Monomial, Poly)> {
        self.coefficients_in(|v| families.contains(&v.family()))
    }

    /// Evaluates at complex values for every variable.
    pub fn eval_complex(&self, point: &FxHashMap<VarId, Complex64>) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = Complex64::new(c.to_f64(), 0.0);
            for &(v, e) in m.pairs() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                t *= x.powu(e as u32);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates exactly at rational values for every variable.
    pub fn eval_rational(&self, point: &FxHashMap<VarId, Rational>) -> Result<Rational> {
        let mut total = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.pairs() {
                let x = point
                    .get(&v)
                    .ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                t = &t * &x.pow(e as u32);
            }
            total += &t;
        }
        Ok(total)
    }

    /// Coefficient of the empty monomial.
    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one())
    }

    /// Maximum absolute coefficient as a float.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.1.to_f64().abs())
            .fold(0.0, f64::max)
    }

    /// Applies polynomial rewrite rules `lhs -> rhs` (each lhs a monomial)
    /// until no term is divisible by any lhs. Rules must terminate, e.g.
    /// `ω^2 -> -ω - 1`.
    pub fn reduce(&self, rules: &[(Monomial, Poly)]) -> Poly {
        let mut current = self.clone();
        loop {
            let mut changed = false;
            let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
            for (m, c) in &current.terms {
                let hit = rules.iter().find_map(|(l, r)| m.div(l).map(|q| (q, r)));
                match hit {
                    Some((q, r)) => {
                        changed = true;
                        for (rm, rc) in &r.terms {
                            accumulate(&mut acc, q.mul(rm), &(c * rc));
                        }
                    }
                    None => accumulate(&mut acc, m.clone(), c),
                }
            }
            current = Poly::from_map(acc);
            if !changed {
                return current;
            }
        }
    }

    /// Leading term under the graded-lex order.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }
}

#[inline]
pub(crate) fn accumulate(acc: &mut FxHashMap<Monomial, Rational>, m: Monomial, c: &Rational) {
    match acc.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c.clone());
        }
    }
}

fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    let nb = |c: &Rational| if negate_b { -c } else { c.clone() };
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        match ma.cmp(mb) {
            std::cmp::Ordering::Greater => {
                out.push((ma.clone(), ca.clone()));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((mb.clone(), nb(cb)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = if negate_b { ca - cb } else { ca + cb };
                if !s.is_zero() {
                    out.push((ma.clone(), s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(b.terms[j..].iter().map(|(m, c)| (m.clone(), nb(c))));
    Poly { terms: out }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        Poly::sub(self, rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

impl From<VarId> for Poly {
    fn from(v: VarId) -> Poly {
        Poly::var(v)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::int(n)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::render(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(p("x1 + x2").mul(&p("x1 - x2")), p("x1^2 - x2^2"));
        assert!(p("x1 + 3").mul(&Poly::zero()).is_zero());
    }

    #[test]
    fn pow_counts() {
        assert_eq!(p("x1 + x2").pow(2), p("x1^2 + 2 x1 x2 + x2^2"));
        assert_eq!(p("u1 x1 + u2 x2 + u3 x3").pow(3).term_count(), 10);
        assert_eq!(p("x1 + 2").pow(0), Poly::one());
    }

    #[test]
    fn derivative() {
        assert_eq!(p("x1^3").derive(VarId::x(1)), p("3 x1^2"));
        assert!(p("x2").derive(VarId::x(1)).is_zero());
    }

    #[test]
    fn reduce_with_root_of_unity() {
        let w = VarId::bare(Family::Omega);
        let rules = vec![(Monomial::power(w, 2), p("-ω - 1"))];
        let prod = p("x1 + x2 + x3")
            .mul(&p("x1 + ω x2 + ω^2 x3"))
            .mul(&p("x1 + ω^2 x2 + ω x3"))
            .reduce(&rules);
        assert_eq!(prod, p("x1^3 + x2^3 + x3^3 - 3 x1 x2 x3"));
    }

    #[test]
    fn degree_in_family() {
        let q = p("u1 x1^2 + u2 x2 x3");
        assert_eq!(q.degree_in(Family::X), (2, true));
        assert_eq!(q.degree_in(Family::U), (1, true));
        assert_eq!(p("x1 + x2^2").degree_in(Family::X), (2, false));
    }

    #[test]
    fn coefficient_extraction() {
        let q = p("3 f111 x1^2 + f112 x1^2 + x2 f122");
        let cs = q.coefficients_in_families(&[Family::X]);
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].1, p("3 f111 + f112"));
    }
}
