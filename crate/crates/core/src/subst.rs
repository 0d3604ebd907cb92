//! Substitutions: variable maps, symbol-power (derivative) substitution,
//! coefficient renaming and line coordinates.

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{accumulate, Poly};
use crate::rational::Rational;
use crate::var::{triple, Family, VarId};

#[derive(Debug, Clone)]
pub enum Substitution {
    /// Replace each bound variable by a polynomial. In strict mode any
    /// unbound variable of a family that has at least one binding is an
    /// error; lenient mode leaves it alone.
    VariableMap {
        bindings: FxHashMap<VarId, Poly>,
        strict: bool,
    },
    /// Replace every degree-`degree` monomial `s^α` in the triple `symbol` by
    /// the partial derivative `∂^α target` with respect to x.
    SymbolPower {
        symbol: Family,
        degree: u32,
        target: Poly,
    },
    /// Rename every variable of family `from` to the same subscript in `to`.
    CoefficientRename { from: Family, to: Family },
    /// `t ↦ [pq]`: `t1 ↦ p2q3 − p3q2`, `t2 ↦ p3q1 − p1q3`, `t3 ↦ p1q2 − p2q1`.
    LineCoordinates { target: Family, p: Family, q: Family },
}

impl Substitution {
    pub fn map(bindings: impl IntoIterator<Item = (VarId, Poly)>) -> Self {
        Substitution::VariableMap {
            bindings: bindings.into_iter().collect(),
            strict: true,
        }
    }

    pub fn lenient(bindings: impl IntoIterator<Item = (VarId, Poly)>) -> Self {
        Substitution::VariableMap {
            bindings: bindings.into_iter().collect(),
            strict: false,
        }
    }

    pub fn symbol_power(symbol: Family, degree: u32, target: Poly) -> Self {
        Substitution::SymbolPower {
            symbol,
            degree,
            target,
        }
    }

    pub fn line(target: Family, p: Family, q: Family) -> Self {
        Substitution::LineCoordinates { target, p, q }
    }
}

pub fn substitute(p: &Poly, s: &Substitution) -> Result<Poly> {
    match s {
        Substitution::VariableMap { bindings, strict } => {
            if *strict {
                let families: Vec<Family> = bindings.keys().map(|v| v.family()).collect();
                for v in p.variables() {
                    if families.contains(&v.family()) && !bindings.contains_key(&v) {
                        return Err(Error::UnboundVariable(v.to_string()));
                    }
                }
            }
            Ok(map_vars(p, bindings))
        }
        Substitution::SymbolPower {
            symbol,
            degree,
            target,
        } => symbol_power(p, *symbol, *degree, target),
        Substitution::CoefficientRename { from, to } => {
            let mut bindings = FxHashMap::default();
            for v in p.variables() {
                if v.family() == *from {
                    let w = VarId::new(*to, &v.digits())?;
                    bindings.insert(v, Poly::var(w));
                }
            }
            Ok(map_vars(p, &bindings))
        }
        Substitution::LineCoordinates { target, p: a, q: b } => {
            Ok(map_vars(p, &line_bindings(*target, *a, *b)))
        }
    }
}

/// Bindings realizing `t ↦ [pq]`.
pub fn line_bindings(target: Family, p: Family, q: Family) -> FxHashMap<VarId, Poly> {
    let t = triple(target);
    let cross = cross_product(
        &triple(p).map(Poly::var),
        &triple(q).map(Poly::var),
    );
    t.into_iter().zip(cross).collect()
}

/// Cross product of two triples of polynomials.
pub fn cross_product(p: &[Poly; 3], q: &[Poly; 3]) -> [Poly; 3] {
    [
        p[1].mul(&q[2]).sub(&p[2].mul(&q[1])),
        p[2].mul(&q[0]).sub(&p[0].mul(&q[2])),
        p[0].mul(&q[1]).sub(&p[1].mul(&q[0])),
    ]
}

/// Substitutes polynomials for variables, caching powers of each image.
pub fn map_vars(p: &Poly, bindings: &FxHashMap<VarId, Poly>) -> Poly {
    if bindings.is_empty() {
        return p.clone();
    }
    let mut powers: FxHashMap<(VarId, u16), Poly> = FxHashMap::default();
    let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
    // group terms by their bound part so each image product is built once
    let mut groups: FxHashMap<Monomial, Vec<(Monomial, Rational)>> = FxHashMap::default();
    for (m, c) in p.terms() {
        let (bound, free) = m.split(|v| bindings.contains_key(&v));
        groups.entry(bound).or_default().push((free, c.clone()));
    }
    for (bound, frees) in groups {
        let mut image = Poly::one();
        for &(v, e) in bound.pairs() {
            let pw = powers
                .entry((v, e))
                .or_insert_with(|| bindings[&v].pow(e as u32));
            image = image.mul(pw);
            if image.is_zero() {
                break;
            }
        }
        for (im, ic) in image.terms() {
            for (free, c) in &frees {
                accumulate(&mut acc, im.mul(free), &(ic * c));
            }
        }
    }
    Poly::from_map(acc)
}

fn symbol_power(p: &Poly, symbol: Family, degree: u32, target: &Poly) -> Result<Poly> {
    let sym = triple(symbol);
    let x = triple(Family::X);
    let mut cache: FxHashMap<[u16; 3], Poly> = FxHashMap::default();
    let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
    for (m, c) in p.terms() {
        let alpha = [m.exponent(sym[0]), m.exponent(sym[1]), m.exponent(sym[2])];
        let d: u32 = alpha.iter().map(|&a| a as u32).sum();
        if d != degree {
            return Err(Error::DegreeMismatch(format!(
                "term {m} has degree {d} in {}, expected {degree}",
                symbol.name()
            )));
        }
        let (_, rest) = m.split(|v| v.family() == symbol);
        let deriv = cache.entry(alpha).or_insert_with(|| {
            target.derive_multi(&[
                (x[0], alpha[0] as u32),
                (x[1], alpha[1] as u32),
                (x[2], alpha[2] as u32),
            ])
        });
        for (dm, dc) in deriv.terms() {
            accumulate(&mut acc, dm.mul(&rest), &(dc * c));
        }
    }
    Ok(Poly::from_map(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn line_coordinates_give_bracket() {
        let ux = p("u1 x1 + u2 x2 + u3 x3");
        let got = substitute(&ux, &Substitution::line(Family::U, Family::Y, Family::Z)).unwrap();
        let xyz = p("x1 y2 z3 - x1 y3 z2 - x2 y1 z3 + x2 y3 z1 + x3 y1 z2 - x3 y2 z1");
        assert_eq!(got, xyz);
    }

    #[test]
    fn symbol_power_is_euler() {
        let f = p("x1^3 + 2 x1 x2 x3 - x3^3");
        let ax = p("a1 x1 + a2 x2 + a3 x3");
        let got = substitute(&ax, &Substitution::symbol_power(Family::A, 1, f.clone())).unwrap();
        assert_eq!(got, f.scale(&Rational::from_int(3)));
        let bad = p("a1 a2 + a3");
        assert!(matches!(
            substitute(&bad, &Substitution::symbol_power(Family::A, 2, f)),
            Err(Error::DegreeMismatch(_))
        ));
    }

    #[test]
    fn rename_coefficients() {
        let q = p("f12^2 - 4 f11 f22");
        let got = substitute(
            &q,
            &Substitution::CoefficientRename {
                from: Family::F,
                to: Family::G,
            },
        )
        .unwrap();
        assert_eq!(got, p("g12^2 - 4 g11 g22"));
    }

    #[test]
    fn strict_and_lenient_maps() {
        let q = p("x1 + x2");
        let one = [(VarId::x(1), p("y1"))];
        assert!(matches!(
            substitute(&q, &Substitution::map(one.clone())),
            Err(Error::UnboundVariable(_))
        ));
        assert_eq!(substitute(&q, &Substitution::lenient(one)).unwrap(), p("y1 + x2"));
    }
}
