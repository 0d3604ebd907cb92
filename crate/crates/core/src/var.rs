//! The fixed universe of named, indexed variables.
//!
//! A [`VarId`] packs a family rank and an index code into a `u32`. Ordering is
//! family rank first (the order of [`Family::ALL`]), then the index digit
//! string compared lexicographically. Coefficient families with
//! multi-digit subscripts (`f123`, `Δ113`, `θ3312`) store their digits in
//! nondecreasing order; `θ` sorts its two u-indices and its two x-indices
//! separately. `G` (the coefficients of a mixed form `G_ux`) keeps its two
//! digits in order, u-index first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum Family {
    X = 0,
    Y,
    Z,
    U,
    V,
    /// weights X1, X2, X3 of the expansion x ↦ X1 x + X2 y + X3 z
    BigX,
    A,
    B,
    C,
    D,
    F,
    G,
    H,
    /// coefficient of a contravariant form
    BigF,
    BigG,
    Delta,
    Theta,
    Omega,
    Iota,
    Sigma,
    Alpha,
    Gamma,
    /// reserved symbol triples used while expanding transvectants
    InternalA,
    InternalB,
    InternalC,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum IndexShape {
    None,
    /// single digit in the given inclusive range
    Digit(u8, u8),
    /// between `min` and `max` digits, each in 1..=3, sorted ascending
    Sorted(u8, u8),
    /// four digits 1..=3, sorted in pairs
    Pairs,
    /// exactly `n` digits 1..=3 kept in the given order
    Ordered(u8),
}

impl Family {
    pub const ALL: [Family; 25] = [
        Family::X,
        Family::Y,
        Family::Z,
        Family::U,
        Family::V,
        Family::BigX,
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::F,
        Family::G,
        Family::H,
        Family::BigF,
        Family::BigG,
        Family::Delta,
        Family::Theta,
        Family::Omega,
        Family::Iota,
        Family::Sigma,
        Family::Alpha,
        Family::Gamma,
        Family::InternalA,
        Family::InternalB,
        Family::InternalC,
    ];

    /// Canonical (rendered) name.
    pub fn name(self) -> &'static str {
        match self {
            Family::X => "x",
            Family::Y => "y",
            Family::Z => "z",
            Family::U => "u",
            Family::V => "v",
            Family::BigX => "X",
            Family::A => "a",
            Family::B => "b",
            Family::C => "c",
            Family::D => "d",
            Family::F => "f",
            Family::G => "g",
            Family::H => "h",
            Family::BigF => "F",
            Family::BigG => "G",
            Family::Delta => "Δ",
            Family::Theta => "θ",
            Family::Omega => "ω",
            Family::Iota => "ι",
            Family::Sigma => "σ",
            Family::Alpha => "α",
            Family::Gamma => "γ",
            Family::InternalA => "_A",
            Family::InternalB => "_B",
            Family::InternalC => "_C",
        }
    }

    fn aliases(self) -> &'static [&'static str] {
        match self {
            Family::Delta => &["D"],
            Family::Theta => &["th"],
            Family::Omega => &["w"],
            Family::Iota => &["i"],
            Family::Sigma => &["s"],
            Family::Alpha => &["al"],
            Family::Gamma => &["ga"],
            _ => &[],
        }
    }

    fn shape(self) -> IndexShape {
        match self {
            Family::X | Family::Y | Family::Z | Family::U | Family::V => IndexShape::Digit(1, 3),
            Family::InternalA | Family::InternalB | Family::InternalC => IndexShape::Digit(1, 3),
            Family::BigX => IndexShape::Digit(1, 3),
            Family::Alpha => IndexShape::Digit(1, 2),
            Family::A | Family::B | Family::C | Family::D => IndexShape::Digit(0, 3),
            Family::F | Family::G | Family::H | Family::BigF => IndexShape::Sorted(1, 3),
            Family::BigG => IndexShape::Ordered(2),
            Family::Delta => IndexShape::Sorted(3, 3),
            Family::Theta => IndexShape::Pairs,
            Family::Omega | Family::Iota | Family::Sigma | Family::Gamma => IndexShape::None,
        }
    }

    fn from_rank(r: u8) -> Family {
        Family::ALL[r as usize]
    }

    /// Whether the family names a point or line triple whose members are
    /// indexed 1..=3 (x, y, z, u, v and the internal symbol triples).
    pub fn is_triple(self) -> bool {
        self != Family::BigX && matches!(self.shape(), IndexShape::Digit(1, 3))
    }

    /// Whether callers may use this family in parsed input.
    pub fn is_public(self) -> bool {
        !matches!(
            self,
            Family::InternalA | Family::InternalB | Family::InternalC
        )
    }
}

/// Encodes a digit string (digits 0..=3, at most four of them) so that
/// integer order equals lexicographic string order.
fn encode_digits(d: &[u8]) -> u16 {
    let mut code = 0u16;
    for i in 0..4 {
        code *= 5;
        if let Some(&x) = d.get(i) {
            code += x as u16 + 1;
        }
    }
    code
}

fn decode_digits(mut code: u16) -> ([u8; 4], usize) {
    let mut out = [0u8; 4];
    for i in (0..4).rev() {
        out[i] = (code % 5) as u8;
        code /= 5;
    }
    let len = out.iter().take_while(|&&c| c != 0).count();
    let mut digits = [0u8; 4];
    for i in 0..len {
        digits[i] = out[i] - 1;
    }
    (digits, len)
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarId(u32);

impl VarId {
    /// Builds a variable from a family and subscript digits, normalizing
    /// multi-index subscripts. Fails if the subscript does not fit the
    /// family.
    pub fn new(family: Family, digits: &[u8]) -> Result<VarId> {
        let bad = || {
            let mut s = family.name().to_string();
            s.extend(digits.iter().map(|d| char::from(b'0' + d)));
            Error::UnknownVariable(s)
        };
        let mut d: smallvec::SmallVec<[u8; 4]> = digits.iter().copied().collect();
        match family.shape() {
            IndexShape::None => {
                if !d.is_empty() {
                    return Err(bad());
                }
            }
            IndexShape::Digit(lo, hi) => {
                if d.len() != 1 || d[0] < lo || d[0] > hi {
                    return Err(bad());
                }
            }
            IndexShape::Sorted(min, max) => {
                if d.len() < min as usize || d.len() > max as usize {
                    return Err(bad());
                }
                if d.iter().any(|&x| !(1..=3).contains(&x)) {
                    return Err(bad());
                }
                d.sort_unstable();
            }
            IndexShape::Ordered(n) => {
                if d.len() != n as usize || d.iter().any(|&x| !(1..=3).contains(&x)) {
                    return Err(bad());
                }
            }
            IndexShape::Pairs => {
                if d.len() != 4 || d.iter().any(|&x| !(1..=3).contains(&x)) {
                    return Err(bad());
                }
                d[..2].sort_unstable();
                d[2..].sort_unstable();
            }
        }
        Ok(VarId(((family as u32) << 16) | encode_digits(&d) as u32))
    }

    /// Convenience for the single-index families; panics on a bad index.
    pub fn indexed(family: Family, i: u8) -> VarId {
        VarId::new(family, &[i]).expect("index out of range for family")
    }

    /// Member `i` (1-based) of a triple family.
    pub fn x(i: u8) -> VarId {
        Self::indexed(Family::X, i)
    }

    /// Coefficient symbol with the given subscript, e.g. `coeff(F, &[1,2,3])`.
    pub fn coeff(family: Family, digits: &[u8]) -> VarId {
        VarId::new(family, digits).expect("invalid coefficient subscript")
    }

    /// Indexless symbol such as ω.
    pub fn bare(family: Family) -> VarId {
        VarId::new(family, &[]).expect("family requires an index")
    }

    pub fn family(self) -> Family {
        Family::from_rank((self.0 >> 16) as u8)
    }

    /// Subscript digits.
    pub fn digits(self) -> smallvec::SmallVec<[u8; 4]> {
        let (d, len) = decode_digits((self.0 & 0xffff) as u16);
        d[..len].iter().copied().collect()
    }

    /// The single index of a triple-family variable (0 for indexless).
    pub fn index(self) -> u8 {
        self.digits().first().copied().unwrap_or(0)
    }

    /// Parses a complete variable name such as `x1`, `f123`, `th3312`, `ω`.
    pub fn parse(name: &str) -> Result<VarId> {
        match split_name(name) {
            Some((family, rest)) if rest.is_empty() || rest.chars().all(|c| c.is_ascii_digit()) => {
                if !family.is_public() {
                    return Err(Error::UnknownVariable(name.to_string()));
                }
                let digits: Vec<u8> = rest.bytes().map(|b| b - b'0').collect();
                VarId::new(family, &digits).map_err(|_| Error::UnknownVariable(name.to_string()))
            }
            _ => Err(Error::UnknownVariable(name.to_string())),
        }
    }
}

/// Longest family name or alias that prefixes `s`.
pub(crate) fn split_name(s: &str) -> Option<(Family, &str)> {
    let mut best: Option<(Family, usize)> = None;
    for fam in Family::ALL {
        let names = std::iter::once(fam.name()).chain(fam.aliases().iter().copied());
        for n in names {
            if s.starts_with(n) && best.is_none_or(|(_, l)| n.len() > l) {
                best = Some((fam, n.len()));
            }
        }
    }
    best.map(|(f, l)| (f, &s[l..]))
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family().name())?;
        for d in self.digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The three members of a triple family, e.g. `[x1, x2, x3]`.
pub fn triple(family: Family) -> [VarId; 3] {
    [
        VarId::indexed(family, 1),
        VarId::indexed(family, 2),
        VarId::indexed(family, 3),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_round_trip() {
        for name in ["x1", "u3", "f123", "f12", "Δ113", "θ3312", "ω", "α2", "a0", "X2", "F3"] {
            assert_eq!(VarId::parse(name).unwrap().to_string(), name);
        }
    }

    #[test]
    fn aliases_and_normalization() {
        assert_eq!(VarId::parse("D311").unwrap().to_string(), "Δ113");
        assert_eq!(VarId::parse("th2113").unwrap().to_string(), "θ1213");
        assert_eq!(VarId::parse("f321").unwrap(), VarId::parse("f123").unwrap());
        assert_eq!(VarId::parse("ga").unwrap().to_string(), "γ");
        assert_eq!(VarId::parse("G21").unwrap().to_string(), "G21");
    }

    #[test]
    fn rejects_bad_names() {
        for name in ["x4", "x", "q1", "f124", "ω1", "_A1", "θ12"] {
            assert!(VarId::parse(name).is_err(), "{name}");
        }
    }

    #[test]
    fn ordering_is_family_then_lexicographic_index() {
        let v = |s| VarId::parse(s).unwrap();
        assert!(v("x1") < v("x2"));
        assert!(v("x3") < v("y1"));
        assert!(v("f111") < v("f112"));
        assert!(v("f12") < v("f2"));
        assert!(v("u1") < v("f111"));
    }
}
