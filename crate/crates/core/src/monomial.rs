use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::var::{Family, VarId};

/// A power product of variables, stored as strictly increasing `(VarId,
/// exponent)` pairs with positive exponents.
///
/// `Ord` is graded lexicographic: higher total degree is greater, ties broken
/// lexicographically with earlier variables (smaller `VarId`) weighing more.
/// So `x1^3 > x1^2 x2 > x2^3 > x1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    deg: u32,
    vars: SmallVec<[(VarId, u16); 6]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: VarId, e: u16) -> Self {
        if e == 0 {
            return Self::one();
        }
        let mut vars = SmallVec::new();
        vars.push((v, e));
        Monomial { deg: e as u32, vars }
    }

    /// Product of the listed variables, with repeats.
    pub fn from_vars(vars: &[VarId]) -> Self {
        Self::from_pairs(vars.iter().map(|&v| (v, 1)))
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zero powers.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, u16)>) -> Self {
        let mut vars: SmallVec<[(VarId, u16); 6]> = pairs.into_iter().filter(|p| p.1 > 0).collect();
        vars.sort_unstable_by_key(|p| p.0);
        let mut out: SmallVec<[(VarId, u16); 6]> = SmallVec::with_capacity(vars.len());
        for (v, e) in vars {
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += e,
                _ => out.push((v, e)),
            }
        }
        let deg = out.iter().map(|p| p.1 as u32).sum();
        Monomial { deg, vars: out }
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn pairs(&self) -> &[(VarId, u16)] {
        &self.vars
    }

    pub fn exponent(&self, v: VarId) -> u16 {
        match self.vars.binary_search_by_key(&v, |p| p.0) {
            Ok(i) => self.vars[i].1,
            Err(_) => 0,
        }
    }

    pub fn degree_in(&self, family: Family) -> u32 {
        self.vars
            .iter()
            .filter(|p| p.0.family() == family)
            .map(|p| p.1 as u32)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if other.vars.is_empty() {
            return self.clone();
        }
        if self.vars.is_empty() {
            return other.clone();
        }
        let mut vars = SmallVec::with_capacity(self.vars.len() + other.vars.len());
        let (a, b) = (&self.vars, &other.vars);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    vars.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    vars.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    vars.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        vars.extend_from_slice(&a[i..]);
        vars.extend_from_slice(&b[j..]);
        Monomial {
            deg: self.deg + other.deg,
            vars,
        }
    }

    /// Lowers the exponent of `v` by one, returning the old exponent, or
    /// `None` if `v` does not occur.
    pub fn lower(&self, v: VarId) -> Option<(u16, Monomial)> {
        let i = self.vars.binary_search_by_key(&v, |p| p.0).ok()?;
        let mut out = self.clone();
        let e = out.vars[i].1;
        if e == 1 {
            out.vars.remove(i);
        } else {
            out.vars[i].1 -= 1;
        }
        out.deg -= 1;
        Some((e, out))
    }

    /// Splits into the part made of variables satisfying `keep` and the rest.
    pub fn split(&self, keep: impl Fn(VarId) -> bool) -> (Monomial, Monomial) {
        let mut a = Monomial::one();
        let mut b = Monomial::one();
        for &(v, e) in &self.vars {
            let t = if keep(v) { &mut a } else { &mut b };
            t.vars.push((v, e));
            t.deg += e as u32;
        }
        (a, b)
    }

    /// If `d` divides `self`, returns `self / d`.
    pub fn div(&self, d: &Monomial) -> Option<Monomial> {
        let mut out = Monomial::one();
        let mut j = 0;
        for &(v, e) in &self.vars {
            let mut e = e;
            if j < d.vars.len() && d.vars[j].0 < v {
                return None;
            }
            if j < d.vars.len() && d.vars[j].0 == v {
                if d.vars[j].1 > e {
                    return None;
                }
                e -= d.vars[j].1;
                j += 1;
            }
            if e > 0 {
                out.vars.push((v, e));
                out.deg += e as u32;
            }
        }
        if j < d.vars.len() {
            return None;
        }
        Some(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for (a, b) in self.vars.iter().zip(other.vars.iter()) {
                if a.0 != b.0 {
                    // the monomial containing the earlier variable is larger
                    return if a.0 < b.0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.vars.len().cmp(&other.vars.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.vars.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.vars.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::var::VarId;

    fn m(pairs: &[(&str, u16)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|(n, e)| (VarId::parse(n).unwrap(), *e)))
    }

    #[test]
    fn graded_lex_order() {
        let x13 = m(&[("x1", 3)]);
        let x12x2 = m(&[("x1", 2), ("x2", 1)]);
        let x23 = m(&[("x2", 3)]);
        let x1 = m(&[("x1", 1)]);
        assert!(x13 > x12x2);
        assert!(x12x2 > x23);
        assert!(x23 > x1);
        assert!(x1 > Monomial::one());
        let x1x3 = m(&[("x1", 1), ("x3", 1)]);
        let x22 = m(&[("x2", 2)]);
        assert!(x1x3 > x22);
    }

    #[test]
    fn mul_div_lower() {
        let a = m(&[("x1", 2), ("y3", 1)]);
        let b = m(&[("x1", 1), ("x2", 1)]);
        let p = a.mul(&b);
        assert_eq!(p, m(&[("x1", 3), ("x2", 1), ("y3", 1)]));
        assert_eq!(p.div(&b), Some(a.clone()));
        assert_eq!(a.div(&b), None);
        let (e, l) = p.lower(VarId::parse("x2").unwrap()).unwrap();
        assert_eq!(e, 1);
        assert_eq!(l.degree(), 4);
    }
}
