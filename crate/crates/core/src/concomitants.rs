//! The concomitants of a ternary cubic.
//!
//! Each concomitant is computed once for the generic cubic (coefficients
//! `f111 … f333` as symbols) from its defining transvectant, then evaluated
//! at a particular form by substituting that form's coefficients. The
//! alternative formulas are available as cross-checks.

use std::fmt;
use std::str::FromStr;
use std::sync::{LazyLock, OnceLock};

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::calculus::{contract_ux, gradient, jacobian, transvectant, ux};
use crate::error::{Error, Result};
use crate::forms::{coefficient_bindings, generic_cubic, CubicForm};
use crate::linalg::det_poly;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::subst::{map_vars, substitute, Substitution};
use crate::var::{Family, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Concomitant {
    Delta,
    Theta,
    SUuu,
    TUuu,
    S,
    T,
    Pi,
    Gamma,
    F6u,
}

impl Concomitant {
    pub const ALL: [Concomitant; 9] = [
        Concomitant::Delta,
        Concomitant::Theta,
        Concomitant::SUuu,
        Concomitant::TUuu,
        Concomitant::S,
        Concomitant::T,
        Concomitant::Pi,
        Concomitant::Gamma,
        Concomitant::F6u,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Concomitant::Delta => "Delta",
            Concomitant::Theta => "theta",
            Concomitant::SUuu => "S_uuu",
            Concomitant::TUuu => "T_uuu",
            Concomitant::S => "S",
            Concomitant::T => "T",
            Concomitant::Pi => "Pi",
            Concomitant::Gamma => "Gamma",
            Concomitant::F6u => "F",
        }
    }

    /// Degrees in x, u and the coefficients of f.
    pub fn degrees(self) -> (u32, u32, u32) {
        match self {
            Concomitant::Delta => (3, 0, 3),
            Concomitant::Theta => (2, 2, 2),
            Concomitant::SUuu => (0, 3, 3),
            Concomitant::TUuu => (0, 3, 5),
            Concomitant::S => (0, 0, 4),
            Concomitant::T => (0, 0, 6),
            Concomitant::Pi => (4, 1, 4),
            Concomitant::Gamma => (1, 4, 5),
            Concomitant::F6u => (0, 6, 4),
        }
    }

    /// Number of terms of the fully expanded generic concomitant.
    pub fn generic_term_count(self) -> usize {
        match self {
            Concomitant::Delta => 73,
            Concomitant::Theta => 84,
            Concomitant::SUuu => 82,
            Concomitant::TUuu => 448,
            Concomitant::S => 25,
            Concomitant::T => 103,
            Concomitant::Pi => 576,
            Concomitant::Gamma => 1314,
            Concomitant::F6u => 418,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Concomitant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Concomitant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let k = match s {
            "Delta" | "delta" | "Δ" | "D" | "hessian" => Concomitant::Delta,
            "theta" | "θ" | "th" => Concomitant::Theta,
            "S_uuu" | "Suuu" | "s_uuu" | "cayleyan" => Concomitant::SUuu,
            "T_uuu" | "Tuuu" | "t_uuu" => Concomitant::TUuu,
            "S" => Concomitant::S,
            "T" => Concomitant::T,
            "Pi" | "pi" | "Π" => Concomitant::Pi,
            "Gamma" | "gamma" | "Γ" => Concomitant::Gamma,
            "F" | "F6u" | "F_6u" | "f6u" => Concomitant::F6u,
            other => return Err(Error::Inapplicable(format!("unknown concomitant {other:?}"))),
        };
        Ok(k)
    }
}

/// The rational factors in front of the defining transvectants.
///
/// The defaults are fixed by the product laws for `f = a_x b_x c_x`: they
/// give `S_uuu = [abc][abu][bcu][cau]` (hence the negative sign in front of
/// `J4`) and `F_6u = [abu]^2 [bcu]^2 [cau]^2` (hence 1/192 rather than the
/// 1/3072 that goes with an unnormalized θ).
#[derive(Debug, Clone, PartialEq)]
pub struct Prefactors {
    pub delta: Rational,
    pub theta: Rational,
    pub s_uuu: Rational,
    pub t_uuu: Rational,
    pub pi: Rational,
    pub gamma: Rational,
    pub f6u: Rational,
}

impl Default for Prefactors {
    fn default() -> Self {
        Prefactors {
            delta: Rational::new(1, 12),
            theta: Rational::new(1, 4),
            s_uuu: Rational::new(-1, 576),
            t_uuu: Rational::new(-1, 576),
            pi: Rational::new(1, 12),
            gamma: Rational::new(1, 432),
            f6u: Rational::new(1, 192),
        }
    }
}

/// Computes and caches the generic concomitants for one set of prefactors.
pub struct Engine {
    prefactors: Prefactors,
    generic: [OnceLock<Poly>; 9],
    checked: [OnceLock<std::result::Result<(), Error>>; 9],
}

static STANDARD: LazyLock<Engine> = LazyLock::new(|| Engine::new(Prefactors::default()));

fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn u_pow(k: u32) -> Poly {
    ux().pow(k)
}

fn j(n: u32, f: &Poly, g: &Poly, h: &Poly) -> Poly {
    transvectant(n, f, g, h).expect("positive order")
}

impl Engine {
    pub fn new(prefactors: Prefactors) -> Self {
        Engine {
            prefactors,
            generic: Default::default(),
            checked: Default::default(),
        }
    }

    /// The engine with the standard prefactors, shared process-wide.
    pub fn standard() -> &'static Engine {
        &STANDARD
    }

    pub fn prefactors(&self) -> &Prefactors {
        &self.prefactors
    }

    /// The concomitant of the generic cubic.
    pub fn generic(&self, k: Concomitant) -> &Poly {
        if let Some(p) = self.generic[k.index()].get() {
            return p;
        }
        let value = self.compute(k);
        self.generic[k.index()].get_or_init(|| value)
    }

    fn compute(&self, k: Concomitant) -> Poly {
        let f = generic_cubic();
        let pf = &self.prefactors;
        match k {
            Concomitant::Delta => j(2, &f, &f, &f).scale(&pf.delta),
            Concomitant::Theta => j(2, &f, &f, &u_pow(2)).scale(&pf.theta),
            Concomitant::SUuu => {
                let fu = f.mul(&ux());
                j(4, &fu, &fu, &fu).scale(&pf.s_uuu)
            }
            Concomitant::TUuu => {
                let fu = f.mul(&ux());
                let du = self.generic(Concomitant::Delta).mul(&ux());
                j(4, &fu, &fu, &du).scale(&pf.t_uuu)
            }
            Concomitant::S => to_invariant(self.generic(Concomitant::SUuu), &f),
            Concomitant::T => to_invariant(self.generic(Concomitant::TUuu), &f),
            Concomitant::Pi => {
                jacobian(self.generic(Concomitant::Delta), &f, &ux()).scale(&pf.pi)
            }
            Concomitant::Gamma => {
                j(3, self.generic(Concomitant::Pi), &f, &u_pow(3)).scale(&pf.gamma)
            }
            Concomitant::F6u => {
                let th = self.generic(Concomitant::Theta);
                j(2, th, th, &u_pow(2)).scale(&pf.f6u)
            }
        }
    }

    /// Number of alternative formulas for `k`, without evaluating them.
    pub fn alternative_count(&self, k: Concomitant) -> usize {
        self.alternatives_names(k).len()
    }

    /// Alternative formulas for `k`, each evaluated on the generic cubic.
    pub fn alternatives(&self, k: Concomitant) -> Vec<(&'static str, Poly)> {
        let f = generic_cubic();
        let g = |c| self.generic(c);
        match k {
            Concomitant::Delta => {
                let [d1, d2, d3] = gradient(&f);
                vec![
                    ("1/2 J[d1 f, d2 f, d3 f]", jacobian(&d1, &d2, &d3).scale(&r(1, 2))),
                    ("1/2 det(Hessian)", hessian_determinant(&f).scale(&r(1, 2))),
                ]
            }
            Concomitant::Theta => vec![("-bordered Hessian", bordered_hessian(&f).neg())],
            Concomitant::SUuu => {
                let [d1, d2, d3] = gradient(&f);
                let u = ux();
                vec![
                    ("Aronhold determinant", aronhold_determinant()),
                    (
                        "-1/24 J3[u d1 f, u d2 f, u d3 f]",
                        j(3, &u.mul(&d1), &u.mul(&d2), &u.mul(&d3)).scale(&r(-1, 24)),
                    ),
                    (
                        "1/96 C[J2[theta, f, u^2]]",
                        contract_ux(&j(2, g(Concomitant::Theta), &f, &u_pow(2)), 1).scale(&r(1, 96)),
                    ),
                ]
            }
            Concomitant::TUuu => vec![(
                "1/96 C[J2[theta, Delta, u^2]]",
                contract_ux(
                    &j(2, g(Concomitant::Theta), g(Concomitant::Delta), &u_pow(2)),
                    1,
                )
                .scale(&r(1, 96)),
            )],
            Concomitant::S => vec![(
                "1/576 C^4[theta^2]",
                contract_ux(&g(Concomitant::Theta).pow(2), 4).scale(&r(1, 576)),
            )],
            Concomitant::T => vec![
                (
                    "S_uuu with u^3 -> Delta",
                    to_invariant(g(Concomitant::SUuu), g(Concomitant::Delta)),
                ),
                (
                    "-1/276480 C^6[theta^3]",
                    contract_ux(&g(Concomitant::Theta).pow(3), 6).scale(&r(-1, 276480)),
                ),
            ],
            Concomitant::Pi => vec![(
                "1/576 J3[f, f^2, f u]",
                j(3, &f, &f.pow(2), &f.mul(&ux())).scale(&r(1, 576)),
            )],
            Concomitant::Gamma => {
                let a = g(Concomitant::TUuu).mul(&ux()).scale(&r(2, 1));
                let b = contract_ux(&g(Concomitant::SUuu).mul(g(Concomitant::Theta)), 1);
                vec![("1/24 (2 T_uuu u - C[S_uuu theta])", a.sub(&b).scale(&r(1, 24)))]
            }
            Concomitant::F6u => {
                let inner = jacobian(g(Concomitant::Theta), &f, &ux());
                vec![(
                    "1/1728 J3[J[theta, f, u], f, u^3]",
                    j(3, &inner, &f, &u_pow(3)).scale(&r(1, 1728)),
                )]
            }
        }
    }

    /// Checks every alternative formula for `k` against the definition on
    /// the generic cubic. The result is cached.
    pub fn cross_check(&self, k: Concomitant) -> Result<()> {
        self.checked[k.index()]
            .get_or_init(|| {
                let def = self.generic(k);
                for (name, alt) in self.alternatives(k) {
                    if &alt != def {
                        return Err(Error::CrossCheckMismatch {
                            quantity: k.name().to_string(),
                            detail: format!(
                                "definition has {} terms, {name} has {} terms, difference has {}",
                                def.term_count(),
                                alt.term_count(),
                                def.sub(&alt).term_count()
                            ),
                        });
                    }
                }
                Ok(())
            })
            .clone()
    }

    /// Evaluates the concomitant at a cubic whose coefficients may be numbers
    /// or polynomials in variables other than x.
    pub fn evaluate(&self, k: Concomitant, cubic: &Poly) -> Result<Poly> {
        let bindings = coefficient_bindings(cubic, Family::F, 3)?;
        Ok(map_vars(self.generic(k), &bindings))
    }

    /// Evaluates the concomitant at a rational cubic.
    pub fn of(&self, k: Concomitant, f: &CubicForm) -> Poly {
        map_vars(self.generic(k), &f.bindings())
    }

    /// All nine concomitants of a rational cubic. With `verify`, every
    /// alternative formula is checked first.
    pub fn concomitant_set(&self, f: &CubicForm, verify: bool) -> Result<ConcomitantSet> {
        let mut provenance = Vec::new();
        for k in Concomitant::ALL {
            let mut sources = vec![definition_text(k).to_string()];
            if verify {
                self.cross_check(k)?;
                sources.extend(self.alternatives_names(k).into_iter().map(str::to_string));
            }
            provenance.push((k, sources));
        }
        let ev = |k| self.of(k, f);
        Ok(ConcomitantSet {
            delta: ev(Concomitant::Delta),
            theta: ev(Concomitant::Theta),
            s_uuu: ev(Concomitant::SUuu),
            t_uuu: ev(Concomitant::TUuu),
            s: ev(Concomitant::S),
            t: ev(Concomitant::T),
            pi: ev(Concomitant::Pi),
            gamma: ev(Concomitant::Gamma),
            f6u: ev(Concomitant::F6u),
            provenance,
        })
    }

    fn alternatives_names(&self, k: Concomitant) -> Vec<&'static str> {
        match k {
            Concomitant::Delta => vec!["1/2 J[d1 f, d2 f, d3 f]", "1/2 det(Hessian)"],
            Concomitant::Theta => vec!["-bordered Hessian"],
            Concomitant::SUuu => vec![
                "Aronhold determinant",
                "-1/24 J3[u d1 f, u d2 f, u d3 f]",
                "1/96 C[J2[theta, f, u^2]]",
            ],
            Concomitant::TUuu => vec!["1/96 C[J2[theta, Delta, u^2]]"],
            Concomitant::S => vec!["1/576 C^4[theta^2]"],
            Concomitant::T => vec!["S_uuu with u^3 -> Delta", "-1/276480 C^6[theta^3]"],
            Concomitant::Pi => vec!["1/576 J3[f, f^2, f u]"],
            Concomitant::Gamma => vec!["1/24 (2 T_uuu u - C[S_uuu theta])"],
            Concomitant::F6u => vec!["1/1728 J3[J[theta, f, u], f, u^3]"],
        }
    }
}

fn definition_text(k: Concomitant) -> &'static str {
    match k {
        Concomitant::Delta => "1/12 J2[f, f, f]",
        Concomitant::Theta => "1/4 J2[f, f, u^2]",
        Concomitant::SUuu => "-1/576 J4[f u, f u, f u]",
        Concomitant::TUuu => "-1/576 J4[f u, f u, Delta u]",
        Concomitant::S => "S_uuu with u^3 -> f",
        Concomitant::T => "T_uuu with u^3 -> f",
        Concomitant::Pi => "1/12 J[Delta, f, u]",
        Concomitant::Gamma => "1/432 J3[Pi, f, u^3]",
        Concomitant::F6u => "1/192 J2[theta, theta, u^2]",
    }
}

/// `‖p‖_{u³↦g}`: replaces `u^α` by `∂^α g`.
pub fn to_invariant(p: &Poly, g: &Poly) -> Poly {
    substitute(p, &Substitution::symbol_power(Family::U, 3, g.clone()))
        .expect("cubic contravariant")
}

fn second_partials(f: &Poly) -> [[Poly; 3]; 3] {
    let g = gradient(f);
    let x = |i: usize| VarId::x(i as u8 + 1);
    std::array::from_fn(|i| std::array::from_fn(|k| g[i].derive(x(k))))
}

/// Determinant of the matrix of second partials.
pub fn hessian_determinant(f: &Poly) -> Poly {
    let h = second_partials(f);
    det_poly(&h.iter().map(|row| row.to_vec()).collect::<Vec<_>>())
}

/// The Hessian matrix bordered by `u`.
pub fn bordered_hessian(f: &Poly) -> Poly {
    let h = second_partials(f);
    let u: Vec<Poly> = crate::var::triple(Family::U).map(Poly::var).to_vec();
    let mut m: Vec<Vec<Poly>> = (0..3)
        .map(|i| {
            let mut row = h[i].to_vec();
            row.push(u[i].clone());
            row
        })
        .collect();
    let mut last = u.clone();
    last.push(Poly::zero());
    m.push(last);
    det_poly(&m)
}

/// Aronhold's 6×6 determinant for `S_uuu` of the generic cubic.
pub fn aronhold_determinant() -> Poly {
    let c = |s: &str| Poly::var(VarId::parse(s).expect("coefficient name"));
    let k = |n: i64, s: &str| c(s).scale(&Rational::from_int(n));
    let u = |i: u8| Poly::var(VarId::indexed(Family::U, i));
    let z = Poly::zero;
    let m = vec![
        vec![k(3, "f111"), c("f112"), c("f113"), u(1), z(), z()],
        vec![k(2, "f112"), k(2, "f122"), c("f123"), u(2), u(1), z()],
        vec![c("f122"), k(3, "f222"), c("f223"), z(), u(2), z()],
        vec![k(2, "f113"), c("f123"), k(2, "f133"), u(3), z(), u(1)],
        vec![c("f123"), k(2, "f223"), k(2, "f233"), z(), u(3), u(2)],
        vec![c("f133"), c("f233"), k(3, "f333"), z(), z(), u(3)],
    ];
    det_poly(&m)
}

/// The nine concomitants of one cubic with a record of which formulas
/// produced (and, in verification mode, confirmed) each.
#[derive(Debug, Clone)]
pub struct ConcomitantSet {
    pub delta: Poly,
    pub theta: Poly,
    pub s_uuu: Poly,
    pub t_uuu: Poly,
    pub s: Poly,
    pub t: Poly,
    pub pi: Poly,
    pub gamma: Poly,
    pub f6u: Poly,
    pub provenance: Vec<(Concomitant, Vec<String>)>,
}

impl ConcomitantSet {
    pub fn get(&self, k: Concomitant) -> &Poly {
        match k {
            Concomitant::Delta => &self.delta,
            Concomitant::Theta => &self.theta,
            Concomitant::SUuu => &self.s_uuu,
            Concomitant::TUuu => &self.t_uuu,
            Concomitant::S => &self.s,
            Concomitant::T => &self.t,
            Concomitant::Pi => &self.pi,
            Concomitant::Gamma => &self.gamma,
            Concomitant::F6u => &self.f6u,
        }
    }
}

/// Concomitant of a rational cubic with the standard prefactors.
pub fn concomitant(k: Concomitant, f: &CubicForm) -> Poly {
    Engine::standard().of(k, f)
}

/// `Δ_xxx` of a rational cubic.
pub fn hessian(f: &CubicForm) -> Poly {
    concomitant(Concomitant::Delta, f)
}

/// `θ_uuxx` of a rational cubic.
pub fn theta(f: &CubicForm) -> Poly {
    concomitant(Concomitant::Theta, f)
}

/// `F_6u` of a rational cubic.
pub fn f6u(f: &CubicForm) -> Poly {
    concomitant(Concomitant::F6u, f)
}

/// `Γ_4ux` of a rational cubic.
pub fn gamma(f: &CubicForm) -> Poly {
    concomitant(Concomitant::Gamma, f)
}

/// `(S_uuu, T_uuu, S, T, Π)` of a rational cubic. With `verify`, the
/// alternative formulas for each are checked on the generic cubic.
pub fn aronhold_set(f: &CubicForm, verify: bool) -> Result<[Poly; 5]> {
    let e = Engine::standard();
    let ks = [
        Concomitant::SUuu,
        Concomitant::TUuu,
        Concomitant::S,
        Concomitant::T,
        Concomitant::Pi,
    ];
    if verify {
        for k in ks {
            e.cross_check(k)?;
        }
    }
    Ok(ks.map(|k| e.of(k, f)))
}

/// Coefficients of a concomitant indexed by the variable monomial, for
/// exact zero and proportionality tests.
pub fn coefficient_map(p: &Poly) -> FxHashMap<crate::monomial::Monomial, Rational> {
    p.terms().iter().cloned().collect()
}
