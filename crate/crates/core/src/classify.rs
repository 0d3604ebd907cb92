//! Exact decision procedures for ternary cubics: the class hierarchy, the
//! complete-reducibility criteria, and the coefficient tests that apply in
//! special coordinates.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::calculus::{transvectant, ux};
use crate::concomitants::{concomitant, Concomitant};
use crate::error::{Error, Result};
use crate::factor::apex;
use crate::forms::{CubicForm, LinearForm};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::var::{Family, VarId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Kind {
    Zero,
    PerfectCube,
    LineTimesSquare,
    DependentProduct,
    CompletelyReducibleGeneric,
    NotCompletelyReducible,
}

impl Kind {
    pub fn is_completely_reducible(self) -> bool {
        self != Kind::NotCompletelyReducible
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Witnesses {
    /// `f = scalar · line³`.
    pub cube_root: Option<(Rational, LinearForm)>,
    /// A nonzero `z` with `f_xxz ≡ 0`.
    pub apex: Option<[Rational; 3]>,
    /// `Δ = λ f`.
    pub lambda: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Classification {
    pub kind: Kind,
    pub witnesses: Witnesses,
    pub criteria_fired: Vec<(String, bool)>,
}

/// Evaluates the hierarchy `θ → F → Δ → Γ`, stopping at the first
/// concomitant that vanishes.
pub fn classify(f: &CubicForm) -> Classification {
    let mut fired = Vec::new();
    let mut witnesses = Witnesses::default();
    if f.is_zero() {
        return Classification {
            kind: Kind::Zero,
            witnesses,
            criteria_fired: fired,
        };
    }
    let theta_zero = concomitant(Concomitant::Theta, f).is_zero();
    fired.push(("theta = 0".to_string(), theta_zero));
    let kind = if theta_zero {
        witnesses.cube_root = cube_root(f);
        witnesses.apex = apex(f);
        Kind::PerfectCube
    } else {
        let f_zero = concomitant(Concomitant::F6u, f).is_zero();
        fired.push(("F = 0".to_string(), f_zero));
        if f_zero {
            witnesses.apex = apex(f);
            Kind::LineTimesSquare
        } else {
            let delta = concomitant(Concomitant::Delta, f);
            let delta_zero = delta.is_zero();
            fired.push(("Delta = 0".to_string(), delta_zero));
            let s_uuu_zero = concomitant(Concomitant::SUuu, f).is_zero();
            fired.push(("S_uuu = 0".to_string(), s_uuu_zero));
            if delta_zero {
                witnesses.apex = apex(f);
                witnesses.lambda = Some(Rational::ZERO);
                Kind::DependentProduct
            } else {
                let gamma_zero = concomitant(Concomitant::Gamma, f).is_zero();
                fired.push(("Gamma = 0".to_string(), gamma_zero));
                if gamma_zero {
                    witnesses.lambda = ratio(&delta, f);
                    Kind::CompletelyReducibleGeneric
                } else {
                    Kind::NotCompletelyReducible
                }
            }
        }
    };
    Classification {
        kind,
        witnesses,
        criteria_fired: fired,
    }
}

/// `f = c · ℓ³` when `θ = 0`, from `27 f_yyy² f = f_xyy³` at a point with
/// `f_yyy ≠ 0`.
pub fn cube_root(f: &CubicForm) -> Option<(Rational, LinearForm)> {
    if f.is_zero() {
        return None;
    }
    let y = crate::factor::integer_points()
        .map(|p| p.map(Rational::from_int))
        .find(|y| !f.eval(y).is_zero())?;
    let fyyy = f.eval(&y);
    let three = Rational::from_int(3);
    let line = LinearForm::new(f.trilinear_line(&y, &y).triple().map(|c| &c * &three));
    let (lead, line) = line.normalized();
    let scale = &lead.pow(3) * &(&Rational::from_int(27) * &(&fyyy * &fyyy)).recip();
    let back = line.to_poly().pow(3).scale(&scale);
    (back == f.to_poly()).then_some((scale, line))
}

/// Criteria for complete reducibility. The last four are only valid when
/// `S ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Criterion {
    Gamma,
    Pi,
    HessianProportional,
    DeltaSqMinusSF,
    FDeltaMinusSuuuSqF,
    SDeltaMinusTF,
    TDeltaMinusSSqF,
    SFMinusSuuuTuuu,
    JDeltaDeltaMinus4STheta,
}

impl Criterion {
    pub const ALL: [Criterion; 9] = [
        Criterion::Gamma,
        Criterion::Pi,
        Criterion::HessianProportional,
        Criterion::DeltaSqMinusSF,
        Criterion::FDeltaMinusSuuuSqF,
        Criterion::SDeltaMinusTF,
        Criterion::TDeltaMinusSSqF,
        Criterion::SFMinusSuuuTuuu,
        Criterion::JDeltaDeltaMinus4STheta,
    ];

    pub fn needs_nonzero_s(self) -> bool {
        matches!(
            self,
            Criterion::SDeltaMinusTF
                | Criterion::TDeltaMinusSSqF
                | Criterion::SFMinusSuuuTuuu
                | Criterion::JDeltaDeltaMinus4STheta
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Gamma => "Gamma",
            Criterion::Pi => "Pi",
            Criterion::HessianProportional => "HessianProportional",
            Criterion::DeltaSqMinusSF => "DeltaSqMinusSF",
            Criterion::FDeltaMinusSuuuSqF => "FDeltaMinusSuuuSqF",
            Criterion::SDeltaMinusTF => "SDeltaMinusTF",
            Criterion::TDeltaMinusSSqF => "TDeltaMinusSSqF",
            Criterion::SFMinusSuuuTuuu => "SFMinusSuuuTuuu",
            Criterion::JDeltaDeltaMinus4STheta => "JDeltaDeltaMinus4STheta",
        }
    }

    /// The expression that must vanish.
    pub fn expression(self) -> &'static str {
        match self {
            Criterion::Gamma => "Gamma",
            Criterion::Pi => "Pi",
            Criterion::HessianProportional => "Delta ∧ f",
            Criterion::DeltaSqMinusSF => "Delta^2 - S f^2",
            Criterion::FDeltaMinusSuuuSqF => "F Delta - S_uuu^2 f",
            Criterion::SDeltaMinusTF => "S Delta - T f",
            Criterion::TDeltaMinusSSqF => "T Delta - S^2 f",
            Criterion::SFMinusSuuuTuuu => "S F - S_uuu T_uuu",
            Criterion::JDeltaDeltaMinus4STheta => "J2[Delta, Delta, u^2] - 4 S theta",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['-', '_'], "");
        Criterion::ALL
            .into_iter()
            .find(|c| c.name().to_ascii_lowercase() == key)
            .ok_or_else(|| Error::Inapplicable(format!("unknown criterion {s:?}")))
    }
}

/// Decides complete reducibility by one criterion, exactly.
pub fn is_completely_reducible(f: &CubicForm, criterion: Criterion) -> Result<bool> {
    let k = |c| concomitant(c, f);
    let fp = f.to_poly();
    let s = || k(Concomitant::S);
    if criterion.needs_nonzero_s() && s().is_zero() {
        return Err(Error::CriterionInapplicable(format!(
            "{} needs S != 0",
            criterion.name()
        )));
    }
    let vanishes = match criterion {
        Criterion::Gamma => k(Concomitant::Gamma).is_zero(),
        Criterion::Pi => k(Concomitant::Pi).is_zero(),
        Criterion::HessianProportional => proportional(&k(Concomitant::Delta), &fp),
        Criterion::DeltaSqMinusSF => {
            let d = k(Concomitant::Delta);
            d.mul(&d).sub(&s().mul(&fp.mul(&fp))).is_zero()
        }
        Criterion::FDeltaMinusSuuuSqF => {
            let su = k(Concomitant::SUuu);
            k(Concomitant::F6u)
                .mul(&k(Concomitant::Delta))
                .sub(&su.mul(&su).mul(&fp))
                .is_zero()
        }
        Criterion::SDeltaMinusTF => s()
            .mul(&k(Concomitant::Delta))
            .sub(&k(Concomitant::T).mul(&fp))
            .is_zero(),
        Criterion::TDeltaMinusSSqF => {
            let sv = s();
            k(Concomitant::T)
                .mul(&k(Concomitant::Delta))
                .sub(&sv.mul(&sv).mul(&fp))
                .is_zero()
        }
        Criterion::SFMinusSuuuTuuu => s()
            .mul(&k(Concomitant::F6u))
            .sub(&k(Concomitant::SUuu).mul(&k(Concomitant::TUuu)))
            .is_zero(),
        Criterion::JDeltaDeltaMinus4STheta => {
            let d = k(Concomitant::Delta);
            let j = transvectant(2, &d, &d, &ux().pow(2))?;
            j.sub(&s().mul(&k(Concomitant::Theta)).scale(&Rational::from_int(4)))
                .is_zero()
        }
    };
    Ok(vanishes)
}

/// `p ∧ q = 0` by cross-multiplication of every coefficient pair.
fn proportional(p: &Poly, q: &Poly) -> bool {
    let mut monos: Vec<Monomial> = p.terms().iter().map(|t| t.0.clone()).collect();
    monos.extend(q.terms().iter().map(|t| t.0.clone()));
    monos.sort();
    monos.dedup();
    for (i, m) in monos.iter().enumerate() {
        for n in &monos[i + 1..] {
            let lhs = &p.coeff(m) * &q.coeff(n);
            let rhs = &p.coeff(n) * &q.coeff(m);
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

fn ratio(delta: &Poly, f: &CubicForm) -> Option<Rational> {
    let fp = f.to_poly();
    if !proportional(delta, &fp) {
        return None;
    }
    let (m, c) = fp.leading()?;
    Some(&delta.coeff(m) * &c.recip())
}

/// `λ` with `Δ = λ f`, if the Hessian is proportional to the form.
pub fn hessian_ratio(f: &CubicForm) -> Result<Option<Rational>> {
    if f.is_zero() {
        return Err(Error::ZeroForm);
    }
    Ok(ratio(&concomitant(Concomitant::Delta, f), f))
}

/// Coefficient `θ_ijkl` of `u_i u_j x_k x_l` (the full coefficient, so
/// `θ_3312` multiplies `u3² x1 x2`).
pub fn theta_coeff(theta: &Poly, u: [u8; 2], x: [u8; 2]) -> Rational {
    let m = Monomial::from_vars(&[
        VarId::indexed(Family::U, u[0]),
        VarId::indexed(Family::U, u[1]),
        VarId::x(x[0]),
        VarId::x(x[1]),
    ]);
    theta.coeff(&m)
}

/// Coefficient of `x_i x_j x_k` in a cubic polynomial.
pub fn cubic_coeff(p: &Poly, sub: [u8; 3]) -> Rational {
    p.coeff(&Monomial::from_vars(&sub.map(VarId::x)))
}

/// The three coefficient expressions of `Γ` at `u = (0,0,1)`, written in the
/// coefficients of `Δ` and `θ`. They are the coefficients of `x1`, `x2`, `x3`
/// of `288 Γ(0,0,1)` up to the factors 6, 6, −1.
pub fn glenn_expressions(delta: &Poly, theta: &Poly) -> [Rational; 3] {
    let d = |s: [u8; 3]| cubic_coeff(delta, s);
    let t = |u: [u8; 2], x: [u8; 2]| theta_coeff(theta, u, x);
    let n = Rational::from_int;
    let (t3311, t3312, t3322) = (t([3, 3], [1, 1]), t([3, 3], [1, 2]), t([3, 3], [2, 2]));
    let e1 = &(&(&d([1, 2, 2]) * &t3311) - &(&d([1, 1, 2]) * &t3312)) + &(&n(3) * &(&d([1, 1, 1]) * &t3322));
    let e2 = &(&(&n(3) * &(&d([2, 2, 2]) * &t3311)) - &(&d([1, 2, 2]) * &t3312)) + &(&d([1, 1, 2]) * &t3322);
    let terms = [
        (n(1), d([1, 2, 2]), t([1, 3], [1, 1])),
        (n(-1), d([1, 1, 2]), t([1, 3], [1, 2])),
        (n(3), d([1, 1, 1]), t([1, 3], [2, 2])),
        (n(3), d([2, 2, 2]), t([2, 3], [1, 1])),
        (n(-1), d([1, 2, 2]), t([2, 3], [1, 2])),
        (n(1), d([1, 1, 2]), t([2, 3], [2, 2])),
        (n(-4), d([2, 2, 3]), t3311.clone()),
        (n(2), d([1, 2, 3]), t3312.clone()),
        (n(-4), d([1, 1, 3]), t3322.clone()),
    ];
    let mut e3 = Rational::ZERO;
    for (c, a, b) in &terms {
        e3 += &(&(c * a) * b);
    }
    [e1, e2, e3]
}

/// `4 θ_3311 θ_3322 − θ_3312²`, which is `48 F(0,0,1)`.
pub fn glenn_gate(theta: &Poly) -> Rational {
    let t = |u: [u8; 2], x: [u8; 2]| theta_coeff(theta, u, x);
    let a = &(&Rational::from_int(4) * &t([3, 3], [1, 1])) * &t([3, 3], [2, 2]);
    let b = t([3, 3], [1, 2]);
    &a - &(&b * &b)
}

/// The coordinate test at `u = (0,0,1)`: `None` when the gate
/// `4θ_3311θ_3322 − θ_3312²` vanishes, else whether all three coefficient
/// expressions vanish.
pub fn glenn_test(f: &CubicForm) -> Option<bool> {
    let theta = concomitant(Concomitant::Theta, f);
    if glenn_gate(&theta).is_zero() {
        return None;
    }
    let delta = concomitant(Concomitant::Delta, f);
    Some(glenn_expressions(&delta, &theta).iter().all(Rational::is_zero))
}

/// Outcome of the shortcut when `f111 = f222 = 0` and `f112 f122 ≠ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorollaryReport {
    pub equations: [Rational; 3],
    pub reducible: bool,
    /// `f = scalar · A B C` when reducible.
    pub factors: Option<(Rational, [LinearForm; 3])>,
}

/// The three low-degree equations of the `f111 = f222 = 0` case and, when
/// they hold, the explicit product.
pub fn glenn_corollary(f: &CubicForm) -> Option<CorollaryReport> {
    let c = |s: [u8; 3]| f.coeff(&s);
    if !c([1, 1, 1]).is_zero() || !c([2, 2, 2]).is_zero() {
        return None;
    }
    let (f112, f122) = (c([1, 1, 2]), c([1, 2, 2]));
    if f112.is_zero() || f122.is_zero() {
        return None;
    }
    let (f113, f123, f133) = (c([1, 1, 3]), c([1, 2, 3]), c([1, 3, 3]));
    let (f223, f233, f333) = (c([2, 2, 3]), c([2, 3, 3]), c([3, 3, 3]));
    let e1 = &(&(&(&f113 * &f113) * &f122) - &(&(&f112 * &f113) * &f123)) + &(&(&f112 * &f112) * &f133);
    let e2 = &(&(&(&f112 * &f223) * &f223) - &(&(&f122 * &f123) * &f223)) + &(&(&f122 * &f122) * &f233);
    let sq112 = &f112 * &f112;
    let sq122 = &f122 * &f122;
    let mut e3 = &(&(&f113 * &f113) * &sq122) * &f223;
    e3 -= &(&(&(&f112 * &f113) * &(&f122 * &f123)) * &f223);
    e3 += &(&(&sq112 * &f113) * &(&f223 * &f223));
    e3 += &(&(&sq112 * &sq122) * &f333);
    let reducible = e1.is_zero() && e2.is_zero() && e3.is_zero();
    let factors = reducible.then(|| {
        let a = LinearForm::new([Rational::ZERO, f112.clone(), f113.clone()]);
        let b = LinearForm::new([f122.clone(), Rational::ZERO, f223.clone()]);
        let p = &f112 * &f122;
        let third = &(&(&p * &f123) - &(&sq112 * &f223)) - &(&f113 * &sq122);
        let cc = LinearForm::new([&p * &f112, &p * &f122, third]);
        ((&sq112 * &sq122).recip(), [a, b, cc])
    });
    Some(CorollaryReport {
        equations: [e1, e2, e3],
        reducible,
        factors,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BrillReport {
    /// `g = Δ_333 f − f_333 Δ`.
    pub g: CubicForm,
    /// Whether `g_113 = g_123 = g_223 = g_133 = g_233 = 0`.
    pub five: bool,
    /// Whether `g_113 = g_123 = g_223 = 0`, when `4 f113 f223 − f123² ≠ 0`.
    pub shortcut: Option<bool>,
}

/// The test in coordinates with `f_333 ≠ 0`; `None` otherwise.
pub fn brill_test(f: &CubicForm) -> Option<BrillReport> {
    let f333 = f.coeff(&[3, 3, 3]);
    if f333.is_zero() {
        return None;
    }
    let delta = concomitant(Concomitant::Delta, f);
    let d333 = cubic_coeff(&delta, [3, 3, 3]);
    let g = f.to_poly().scale(&d333).sub(&delta.scale(&f333));
    let g = CubicForm::from_poly(&g).expect("cubic");
    let zero = |s: [u8; 3]| g.coeff(&s).is_zero();
    let three = zero([1, 1, 3]) && zero([1, 2, 3]) && zero([2, 2, 3]);
    let five = three && zero([1, 3, 3]) && zero([2, 3, 3]);
    let gate = &(&Rational::from_int(4) * &(&f.coeff(&[1, 1, 3]) * &f.coeff(&[2, 2, 3])))
        - &f.coeff(&[1, 2, 3]).pow(2);
    Some(BrillReport {
        g,
        five,
        shortcut: (!gate.is_zero()).then_some(three),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BrioschiReport {
    pub shifted: CubicForm,
    /// `x3 ↦ x3 + shift[0] x1 + shift[1] x2`.
    pub shift: [Rational; 2],
    /// The three cubic equations, evaluated when `Δ_333 ≠ 0` on the shifted form.
    pub equations: Option<[Rational; 3]>,
    pub reducible: Option<bool>,
}

/// Shifts `x3` so that `f_133 = f_233 = 0`, then evaluates the three cubic
/// equations valid in that normal form.
pub fn brioschi_normalize(f: &CubicForm) -> Result<BrioschiReport> {
    let f333 = f.coeff(&[3, 3, 3]);
    if f333.is_zero() {
        return Err(Error::Inapplicable("f333 is zero".into()));
    }
    let inv = (&Rational::from_int(3) * &f333).recip();
    let s1 = -(&f.coeff(&[1, 3, 3]) * &inv);
    let s2 = -(&f.coeff(&[2, 3, 3]) * &inv);
    let x = |i| Poly::var(VarId::x(i));
    let image = x(3).add(&x(1).scale(&s1)).add(&x(2).scale(&s2));
    let bindings = [(VarId::x(3), image)].into_iter().collect();
    let shifted = CubicForm::from_poly(&crate::subst::map_vars(&f.to_poly(), &bindings))?;
    debug_assert!(shifted.coeff(&[1, 3, 3]).is_zero() && shifted.coeff(&[2, 3, 3]).is_zero());
    let delta = concomitant(Concomitant::Delta, &shifted);
    let (equations, reducible) = if cubic_coeff(&delta, [3, 3, 3]).is_zero() {
        (None, None)
    } else {
        let e = brioschi_equations(&shifted);
        let ok = e.iter().all(Rational::is_zero);
        (Some(e), Some(ok))
    };
    Ok(BrioschiReport {
        shifted,
        shift: [s1, s2],
        equations,
        reducible,
    })
}

/// The three cubic equations for a form with `f133 = f233 = 0`.
pub fn brioschi_equations(f: &CubicForm) -> [Rational; 3] {
    let c = |s: [u8; 3]| f.coeff(&s);
    let n = Rational::from_int;
    let gate = &(&n(4) * &(&c([1, 1, 3]) * &c([2, 2, 3]))) - &c([1, 2, 3]).pow(2);
    let f333 = c([3, 3, 3]);
    let tail = |a: Rational| &(&n(3) * &a) * &f333;
    let (f111, f112, f122, f222) = (c([1, 1, 1]), c([1, 1, 2]), c([1, 2, 2]), c([2, 2, 2]));
    [
        &(&c([1, 1, 3]) * &gate) + &tail(&(&f112 * &f112) - &(&n(3) * &(&f111 * &f122))),
        &(&c([1, 2, 3]) * &gate) + &tail(&(&f112 * &f122) - &(&n(9) * &(&f111 * &f222))),
        &(&c([2, 2, 3]) * &gate) + &tail(&(&f122 * &f122) - &(&n(3) * &(&f112 * &f222))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic(s: &str) -> CubicForm {
        CubicForm::parse(s).unwrap()
    }

    const EXAMPLE: &str = "x1^3 - 6x1 x2^2 - 6x2^3 + 6x1^2 x3 + 18x1 x2 x3 + 12x2^2 x3 + 4x3^3";

    #[test]
    fn hierarchy_examples() {
        assert_eq!(classify(&cubic("0")).kind, Kind::Zero);
        let c = classify(&cubic("x1^3"));
        assert_eq!(c.kind, Kind::PerfectCube);
        assert_eq!(c.witnesses.cube_root, Some((Rational::ONE, LinearForm::parse("x1").unwrap())));
        assert_eq!(classify(&cubic("x1 x2^2")).kind, Kind::LineTimesSquare);
        assert_eq!(classify(&cubic("x1^2 x2 + x1 x2^2")).kind, Kind::DependentProduct);
        let c = classify(&cubic(EXAMPLE));
        assert_eq!(c.kind, Kind::CompletelyReducibleGeneric);
        assert_eq!(c.witnesses.lambda, Some(Rational::from_int(-108)));
        assert_eq!(classify(&cubic("x1^2 x2 + x1 x3^2")).kind, Kind::NotCompletelyReducible);
    }

    #[test]
    fn cube_root_of_a_cube() {
        let f = cubic("8x1^3 - 36x1^2 x3 + 54x1 x3^2 - 27x3^3");
        let (c, l) = cube_root(&f).unwrap();
        assert_eq!(l.to_poly().pow(3).scale(&c), f.to_poly());
    }

    #[test]
    fn ratios() {
        assert_eq!(hessian_ratio(&cubic(EXAMPLE)).unwrap(), Some(Rational::from_int(-108)));
        assert_eq!(
            hessian_ratio(&cubic("x1^3 + x2^3 + x3^3 - 3x1 x2 x3")).unwrap(),
            Some(Rational::from_int(-27))
        );
        assert_eq!(hessian_ratio(&cubic("x1^2 x2 + x1 x3^2")).unwrap(), None);
        assert_eq!(hessian_ratio(&cubic("0")), Err(Error::ZeroForm));
    }

    #[test]
    fn criteria_on_the_counterexample() {
        // S = 0 here: the gated criteria are inapplicable, the others say no
        let f = cubic("x1^2 x2 + x1 x3^2");
        for c in Criterion::ALL {
            let r = is_completely_reducible(&f, c);
            if c.needs_nonzero_s() {
                assert!(matches!(r, Err(Error::CriterionInapplicable(_))), "{c}");
            } else {
                assert_eq!(r, Ok(false), "{c}");
            }
        }
    }

    #[test]
    fn criteria_on_the_example() {
        let f = cubic(EXAMPLE);
        for c in Criterion::ALL {
            assert_eq!(is_completely_reducible(&f, c), Ok(true), "{c}");
        }
        assert_eq!("sdelta-minus-tf".parse::<Criterion>().unwrap(), Criterion::SDeltaMinusTF);
    }

    #[test]
    fn glenn() {
        assert_eq!(glenn_test(&cubic(EXAMPLE)), Some(true));
        assert_eq!(glenn_test(&cubic("x1^3")), None);
        assert_eq!(glenn_test(&cubic("x1^2 x2 + x2^2 x1 + x3^3 + x1 x2 x3")), Some(false));
    }

    #[test]
    fn corollary_product() {
        // (2x2 + x3)(3x1 - x3)(...) built to satisfy the equations
        let f = cubic("x1^2 x2 + x1 x2^2 + x1 x2 x3");
        let r = glenn_corollary(&f).unwrap();
        assert!(r.reducible);
        let (s, [a, b, c]) = r.factors.unwrap();
        let back = a.to_poly().mul(&b.to_poly()).mul(&c.to_poly()).scale(&s);
        assert_eq!(back, f.to_poly());
        let g = cubic("x1^2 x2 + x1 x2^2 + x3^3");
        assert!(!glenn_corollary(&g).unwrap().reducible);
        assert_eq!(glenn_corollary(&cubic(EXAMPLE)), None);
    }

    #[test]
    fn brill_example() {
        let f = cubic("x3^3 + x3 x1^2 + x2^3");
        let r = brill_test(&f).unwrap();
        assert!(!r.five);
        assert_eq!(r.g.coeff(&[2, 3, 3]), Rational::from_int(-36));
        assert_eq!(r.g.coeff(&[1, 1, 2]), Rational::from_int(12));
        assert_eq!(r.shortcut, None);
        // the three shortcut coefficients vanish, which is why the gate is needed
        assert!(r.g.coeff(&[1, 1, 3]).is_zero() && r.g.coeff(&[1, 2, 3]).is_zero() && r.g.coeff(&[2, 2, 3]).is_zero());
        assert!(brill_test(&cubic(EXAMPLE)).unwrap().five);
        assert_eq!(brill_test(&cubic("x1 x2 x3")), None);
    }

    #[test]
    fn brioschi() {
        let r = brioschi_normalize(&cubic(EXAMPLE)).unwrap();
        assert_eq!(r.shifted, cubic(EXAMPLE));
        assert_eq!(r.reducible, Some(true));
        let r = brioschi_normalize(&cubic("x1^3 + x1 x3^2 + 2x2 x3^2 + x3^3 + x1 x2 x3")).unwrap();
        assert!(r.shifted.coeff(&[1, 3, 3]).is_zero() && r.shifted.coeff(&[2, 3, 3]).is_zero());
        assert_eq!(r.shifted.coeff(&[3, 3, 3]), Rational::ONE);
        assert!(matches!(brioschi_normalize(&cubic("x1 x2 x3")), Err(Error::Inapplicable(_))));
    }
}
