//! Brackets, polar operators, contraction, Jacobians and transvectants.
//!
//! Differentiation is always with respect to x1, x2, x3; every other
//! variable is treated as a parameter.

use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::var::{triple, Family, VarId};

/// Argument of a bracket: a symbol triple such as `x` or `u`, or three
/// explicit polynomials (the coefficients of a linear form).
#[derive(Debug, Clone)]
pub enum Triple {
    Family(Family),
    Explicit([Poly; 3]),
}

impl Triple {
    pub fn components(&self) -> [Poly; 3] {
        match self {
            Triple::Family(f) => triple(*f).map(Poly::var),
            Triple::Explicit(p) => p.clone(),
        }
    }
}

impl From<Family> for Triple {
    fn from(f: Family) -> Self {
        Triple::Family(f)
    }
}

fn det3(m: &[[Poly; 3]; 3]) -> Poly {
    let minor = |a: usize, b: usize, c: usize, d: usize| m[1][a].mul(&m[2][b]).sub(&m[1][c].mul(&m[2][d]));
    let t0 = m[0][0].mul(&minor(1, 2, 2, 1));
    let t1 = m[0][1].mul(&minor(2, 0, 0, 2));
    let t2 = m[0][2].mul(&minor(0, 1, 1, 0));
    Poly::sum([&t0, &t1, &t2])
}

/// The determinant `[pqr]` whose rows are the three triples.
pub fn bracket(p: &Triple, q: &Triple, r: &Triple) -> Poly {
    det3(&[p.components(), q.components(), r.components()])
}

/// `t_x = t1 x1 + t2 x2 + t3 x3` for a symbol triple `t`.
pub fn incidence(t: Family, x: Family) -> Poly {
    let (a, b) = (triple(t), triple(x));
    Poly::sum(&(0..3).map(|i| Poly::var(a[i]).mul(&Poly::var(b[i]))).collect::<Vec<_>>())
}

/// `u_x`.
pub fn ux() -> Poly {
    incidence(Family::U, Family::X)
}

/// Linear form with explicit coefficients in the family `x`.
pub fn linear(coeffs: &[Poly; 3], x: Family) -> Poly {
    let v = triple(x);
    let parts: Vec<Poly> = (0..3).map(|i| coeffs[i].mul(&Poly::var(v[i]))).collect();
    Poly::sum(&parts)
}

/// Polar operator `P^from_to[p] = Σ to_i ∂p/∂from_i`.
pub fn polar(p: &Poly, from: Family, to: Family) -> Poly {
    let (a, b) = (triple(from), triple(to));
    let parts: Vec<Poly> = (0..3)
        .map(|i| p.derive(a[i]).mul(&Poly::var(b[i])))
        .collect();
    Poly::sum(&parts)
}

/// Contraction `C[p] = Σ ∂²p/∂co_i ∂contra_i`.
pub fn contract(p: &Poly, contra: Family, co: Family) -> Poly {
    let (a, b) = (triple(contra), triple(co));
    let parts: Vec<Poly> = (0..3).map(|i| p.derive(a[i]).derive(b[i])).collect();
    Poly::sum(&parts)
}

/// `C_ux` applied `k` times.
pub fn contract_ux(p: &Poly, k: u32) -> Poly {
    let mut q = p.clone();
    for _ in 0..k {
        q = contract(&q, Family::U, Family::X);
    }
    q
}

/// Gradient with respect to x.
pub fn gradient(p: &Poly) -> [Poly; 3] {
    triple(Family::X).map(|v| p.derive(v))
}

/// Jacobian determinant of three forms with respect to x.
pub fn jacobian(f: &Poly, g: &Poly, h: &Poly) -> Poly {
    det3(&[gradient(f), gradient(g), gradient(h)])
}

const CACHED_ORDERS: usize = 8;

/// Terms of `[abc]^n` grouped as `(α, β, coefficient)`, where the term is
/// `coefficient · a^α b^β c^γ` and γ is fixed by α and β.
type BracketPower = Vec<([u16; 3], [u16; 3], Rational)>;

fn bracket_power_uncached(n: u32) -> BracketPower {
    let abc = bracket(
        &Triple::Family(Family::InternalA),
        &Triple::Family(Family::InternalB),
        &Triple::Family(Family::InternalC),
    );
    let pa = triple(Family::InternalA);
    let pb = triple(Family::InternalB);
    abc.pow(n)
        .terms()
        .iter()
        .map(|(m, c)| {
            let alpha = pa.map(|v| m.exponent(v));
            let beta = pb.map(|v| m.exponent(v));
            (alpha, beta, c.clone())
        })
        .collect()
}

fn bracket_power(n: u32) -> std::borrow::Cow<'static, BracketPower> {
    static CACHE: [OnceLock<BracketPower>; CACHED_ORDERS] = [const { OnceLock::new() }; CACHED_ORDERS];
    let idx = n as usize - 1;
    if idx < CACHED_ORDERS {
        std::borrow::Cow::Borrowed(CACHE[idx].get_or_init(|| bracket_power_uncached(n)))
    } else {
        std::borrow::Cow::Owned(bracket_power_uncached(n))
    }
}

/// Memoized partial derivatives `∂^α p` with respect to x.
pub struct Derivatives<'a> {
    base: &'a Poly,
    memo: FxHashMap<[u16; 3], Poly>,
}

impl<'a> Derivatives<'a> {
    pub fn new(base: &'a Poly) -> Self {
        Derivatives {
            base,
            memo: FxHashMap::default(),
        }
    }

    pub fn get(&mut self, alpha: [u16; 3]) -> &Poly {
        if !self.memo.contains_key(&alpha) {
            let value = match (0..3).find(|&i| alpha[i] > 0) {
                None => self.base.clone(),
                Some(i) => {
                    let mut lower = alpha;
                    lower[i] -= 1;
                    self.get(lower).derive(VarId::x(i as u8 + 1))
                }
            };
            self.memo.insert(alpha, value);
        }
        &self.memo[&alpha]
    }
}

/// Transvectant `J^n[f, g, h]`: expand `[abc]^n` and replace `a^α` by
/// `∂^α f`, `b^β` by `∂^β g`, `c^γ` by `∂^γ h`.
pub fn transvectant(n: u32, f: &Poly, g: &Poly, h: &Poly) -> Result<Poly> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    let deg = |p: &Poly| p.degree_in(Family::X).0;
    if f.is_zero() || g.is_zero() || h.is_zero() || deg(f) < n || deg(g) < n || deg(h) < n {
        return Ok(Poly::zero());
    }
    let terms = bracket_power(n);
    let mut df = Derivatives::new(f);
    let mut dg = Derivatives::new(g);
    let mut dh = Derivatives::new(h);

    // group by α so each ∂^α f multiplies one accumulated inner sum
    let mut by_alpha: Vec<([u16; 3], Vec<([u16; 3], Rational)>)> = Vec::new();
    for (alpha, beta, c) in terms.iter() {
        match by_alpha.iter_mut().find(|e| e.0 == *alpha) {
            Some(e) => e.1.push((*beta, c.clone())),
            None => by_alpha.push((*alpha, vec![(*beta, c.clone())])),
        }
    }
    let total = n as u16;
    let mut parts = Vec::with_capacity(by_alpha.len());
    for (alpha, betas) in &by_alpha {
        let fa = df.get(*alpha).clone();
        if fa.is_zero() {
            continue;
        }
        let mut inner_parts = Vec::with_capacity(betas.len());
        for (beta, c) in betas {
            let gamma = [0, 1, 2].map(|i| total - alpha[i] - beta[i]);
            let gb = dg.get(*beta).clone();
            if gb.is_zero() {
                continue;
            }
            let hc = dh.get(gamma);
            if hc.is_zero() {
                continue;
            }
            inner_parts.push(gb.mul(hc).scale(c));
        }
        let inner = Poly::sum(&inner_parts);
        if !inner.is_zero() {
            parts.push(fa.mul(&inner));
        }
    }
    Ok(Poly::sum(&parts))
}

/// Symbol triples `a`, `b`, `c` as explicit generic linear forms
/// `a1 x1 + a2 x2 + a3 x3` etc.
pub fn symbolic_line(family: Family) -> Poly {
    incidence(family, Family::X)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn bracket_basics() {
        let x = Triple::Family(Family::X);
        let z = Triple::Family(Family::Z);
        assert!(bracket(&x, &x, &z).is_zero());
        let abc = bracket(&Family::A.into(), &Family::B.into(), &Family::C.into());
        assert_eq!(abc.term_count(), 6);
        assert_eq!(abc.pow(2).term_count(), 21);
        let bac = bracket(&Family::B.into(), &Family::A.into(), &Family::C.into());
        assert_eq!(bac, abc.neg());
    }

    #[test]
    fn jacobian_of_squares() {
        let j = jacobian(&p("x1^2"), &p("x2^2"), &p("x3^2"));
        assert_eq!(j, p("8 x1 x2 x3"));
        let f = p("x1^3 + x2 x3^2");
        assert!(jacobian(&f, &f, &p("x1 x2 x3")).is_zero());
    }

    #[test]
    fn first_transvectant_is_jacobian() {
        let f = p("x1^3 + 2 x1 x2 x3 - x3^3");
        let g = p("x1 x2 - x3^2");
        let h = p("u1 x1 + u2 x2 + u3 x3");
        assert_eq!(transvectant(1, &f, &g, &h).unwrap(), jacobian(&f, &g, &h));
    }

    #[test]
    fn transvectant_of_lines_is_bracket() {
        let (a, b, c) = (
            symbolic_line(Family::A),
            symbolic_line(Family::B),
            symbolic_line(Family::C),
        );
        let abc = bracket(&Family::A.into(), &Family::B.into(), &Family::C.into());
        for k in 1..=3u32 {
            let fact = Rational::from_int((1..=k as i64).product::<i64>().pow(3));
            let lhs = transvectant(k, &a.pow(k), &b.pow(k), &c.pow(k)).unwrap();
            assert_eq!(lhs, abc.pow(k).scale(&fact));
        }
    }

    #[test]
    fn low_degree_and_invalid_order() {
        let f = p("x1^2");
        assert!(transvectant(3, &f, &f, &f).unwrap().is_zero());
        assert!(matches!(transvectant(0, &f, &f, &f), Err(Error::InvalidOrder(0))));
    }

    #[test]
    fn polar_and_contraction() {
        let f = p("x1^3 + x1 x2 x3");
        let fy = polar(&f, Family::X, Family::Y);
        assert_eq!(fy, p("3 x1^2 y1 + x2 x3 y1 + x1 x3 y2 + x1 x2 y3"));
        assert!(polar(&p("7"), Family::X, Family::Y).is_zero());
        assert!(contract(&f, Family::U, Family::X).is_zero());
        assert_eq!(contract(&p("u1 x1^2 + u2 x1"), Family::U, Family::X), p("2 x1"));
    }
}
