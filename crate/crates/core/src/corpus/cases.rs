//! Recipes for both sides of every corpus identity.

use std::sync::OnceLock;

use rustc_hash::FxHashMap;

use super::Context;
use crate::calculus::{bracket, contract_ux, gradient, incidence, jacobian, polar, transvectant, ux};
use crate::concomitants::{bordered_hessian, hessian_determinant, Concomitant};
use crate::error::Result;
use crate::forms::{generic_cubic, generic_form};
use crate::monomial::Monomial;
use crate::parse::parse;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::subst::{line_bindings, map_vars, substitute, Substitution};
use crate::symmetry::basis as symmetric_basis;
use crate::var::{triple, Family, VarId};

use Family::{A, B, C, U, V, X, Y, Z};

pub(crate) type Sides = (Poly, Poly);
type Recipe = Box<dyn Fn(&Context) -> Result<Sides> + Send + Sync>;

// ---------------------------------------------------------------- helpers

fn sym(name: &str) -> Poly {
    Poly::var(VarId::parse(name).expect("corpus symbol"))
}

fn text(s: &str) -> Poly {
    parse(s).expect("corpus display parses")
}

fn int(n: i64) -> Poly {
    Poly::int(n)
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn k(n: i64) -> Rational {
    Rational::from_int(n)
}

/// `t_x` for a symbol triple `t`.
fn lin(t: Family) -> Poly {
    incidence(t, X)
}

fn upow(n: u32) -> Poly {
    ux().pow(n)
}

fn br(p: Family, q: Family, r: Family) -> Poly {
    bracket(&p.into(), &q.into(), &r.into())
}

fn j(n: u32, f: &Poly, g: &Poly, h: &Poly) -> Result<Poly> {
    transvectant(n, f, g, h)
}

fn prod(parts: &[&Poly]) -> Poly {
    parts.iter().fold(Poly::one(), |acc, p| acc.mul(p))
}

/// Sum of `c · p`.
fn combo(parts: &[(i64, Poly)]) -> Poly {
    let scaled: Vec<Poly> = parts.iter().map(|(c, p)| p.scale(&k(*c))).collect();
    Poly::sum(&scaled)
}

fn quadratic() -> Poly {
    generic_form(Family::F, X, 2)
}

fn linear_f() -> Poly {
    generic_form(Family::F, X, 1)
}

/// Renames the triple `from` to `to`.
fn rename(p: &Poly, from: Family, to: Family) -> Poly {
    let b: FxHashMap<VarId, Poly> = triple(from)
        .into_iter()
        .zip(triple(to).map(Poly::var))
        .collect();
    map_vars(p, &b)
}

/// Sets the triple `fam` to a numeric point.
fn at(p: &Poly, fam: Family, point: [i64; 3]) -> Poly {
    let b: FxHashMap<VarId, Poly> = triple(fam)
        .into_iter()
        .zip(point.map(int))
        .collect();
    map_vars(p, &b)
}

/// `t ↦ [pq]`.
fn cross(p: &Poly, target: Family, a: Family, b: Family) -> Poly {
    map_vars(p, &line_bindings(target, a, b))
}

/// `t ↦ ∂g`: each `t_i` becomes `∂_i g`.
fn to_gradient(p: &Poly, t: Family, g: &Poly) -> Poly {
    let b: FxHashMap<VarId, Poly> = triple(t).into_iter().zip(gradient(g)).collect();
    map_vars(p, &b)
}

/// Polar of `p` in the triple `var`: the coefficient of
/// `X1^e0 X2^e1 X3^e2` in `p` after `var ↦ X1 var + X2 p1 + X3 p2`.
fn polar_of(p: &Poly, var: Family, points: &[Family], exps: [u16; 3]) -> Poly {
    let w = |i: u8| Poly::var(VarId::indexed(Family::BigX, i));
    let mut fams = vec![var];
    fams.extend_from_slice(points);
    let b: FxHashMap<VarId, Poly> = (0..3)
        .map(|i| {
            let parts: Vec<Poly> = fams
                .iter()
                .enumerate()
                .map(|(s, &fam)| Poly::var(triple(fam)[i]).mul(&w(s as u8 + 1)))
                .collect();
            (triple(var)[i], Poly::sum(&parts))
        })
        .collect();
    let expanded = map_vars(p, &b);
    let target = Monomial::from_pairs(
        (0..3)
            .filter(|&i| exps[i] > 0)
            .map(|i| (VarId::indexed(Family::BigX, i as u8 + 1), exps[i])),
    );
    expanded
        .coefficients_in_families(&[Family::BigX])
        .into_iter()
        .find(|(m, _)| *m == target)
        .map(|(_, c)| c)
        .unwrap_or_else(Poly::zero)
}

/// Coefficient of a monomial in the listed families.
fn coeff_in(p: &Poly, families: &[Family], m: &Monomial) -> Poly {
    p.coefficients_in_families(families)
        .into_iter()
        .find(|(k, _)| k == m)
        .map(|(_, c)| c)
        .unwrap_or_else(Poly::zero)
}

fn xmono(sub: &[u8]) -> Monomial {
    Monomial::from_vars(&sub.iter().map(|&i| VarId::x(i)).collect::<Vec<_>>())
}

fn umono(sub: &[u8]) -> Monomial {
    Monomial::from_vars(&sub.iter().map(|&i| VarId::indexed(U, i)).collect::<Vec<_>>())
}

/// `Δ_ijk` of a cubic covariant.
fn cubic_part(p: &Poly, sub: [u8; 3]) -> Poly {
    coeff_in(p, &[X], &xmono(&sub))
}

/// `θ_ijkl`: coefficient of `u_i u_j x_k x_l`.
fn theta_part(p: &Poly, sub: [u8; 4]) -> Poly {
    let m = umono(&sub[..2]).mul(&xmono(&sub[2..]));
    coeff_in(p, &[U, X], &m)
}

fn generic(ctx: &Context, k: Concomitant) -> Poly {
    ctx.engine.generic(k).clone()
}

/// Binary cubic discriminant of `p X^3 + q X^2 Y + r X Y^2 + s Y^3`.
fn discriminant(p: &Poly, q: &Poly, r: &Poly, s: &Poly) -> Poly {
    combo(&[
        (1, prod(&[q, q, r, r])),
        (-4, prod(&[p, r, r, r])),
        (-4, prod(&[q, q, q, s])),
        (18, prod(&[p, q, r, s])),
        (-27, prod(&[p, p, s, s])),
    ])
}

pub(crate) fn symbolic_product() -> Poly {
    prod(&[&lin(A), &lin(B), &lin(C)])
}

fn binom(n: u32, r: u32) -> i64 {
    (0..r).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn factorial(n: u32) -> i64 {
    (1..=n as i64).product()
}

// ---------------------------------------------------------------- the tangent-line product

/// Pieces shared by the tangent-line identities: the polars of the generic
/// cubic on the line through `y` and `z`, `L_xxx`, `δ` and the
/// transferred `Γ` and `F`.
pub(crate) struct TangentParts {
    pub tangent_product: Poly,
    pub delta_binary: Poly,
    pub gamma_yz: Poly,
    pub f6u_yz: Poly,
    pub xyz: Poly,
}

/// The seven polars `[xyy, xyz, xzz, yyy, yyz, yzz, zzz]` of `f`.
fn line_polars(f: &Poly) -> [Poly; 7] {
    let p = |e: [u16; 3]| polar_of(f, X, &[Y, Z], e);
    [
        p([1, 2, 0]),
        p([1, 1, 1]),
        p([1, 0, 2]),
        p([0, 3, 0]),
        p([0, 2, 1]),
        p([0, 1, 2]),
        p([0, 0, 3]),
    ]
}

/// `L_xxx` written in the polars.
fn tangent_from_polars(pl: &[Poly; 7]) -> Poly {
    let [xyy, xyz, xzz, yyy, yyz, yzz, zzz] = pl;
    combo(&[
        (1, prod(&[xzz, xzz, xzz, yyy, yyy])),
        (-1, prod(&[xyz, xzz, xzz, yyy, yyz])),
        (1, prod(&[xyy, xzz, xzz, yyz, yyz])),
        (1, prod(&[xyz, xyz, xzz, yyy, yzz])),
        (-2, prod(&[xyy, xzz, xzz, yyy, yzz])),
        (-1, prod(&[xyy, xyz, xzz, yyz, yzz])),
        (1, prod(&[xyy, xyy, xzz, yzz, yzz])),
        (-1, prod(&[xyz, xyz, xyz, yyy, zzz])),
        (3, prod(&[xyy, xyz, xzz, yyy, zzz])),
        (1, prod(&[xyy, xyz, xyz, yyz, zzz])),
        (-2, prod(&[xyy, xyy, xzz, yyz, zzz])),
        (-1, prod(&[xyy, xyy, xyz, yzz, zzz])),
        (1, prod(&[xyy, xyy, xyy, zzz, zzz])),
    ])
}

fn tangent_parts<'c>(ctx: &'c Context) -> &'c TangentParts {
    ctx.tangent.get_or_init(|| {
        let pl = line_polars(&generic_cubic());
        TangentParts {
            tangent_product: tangent_from_polars(&pl),
            delta_binary: discriminant(&pl[3], &pl[4], &pl[5], &pl[6]),
            gamma_yz: cross(ctx.engine.generic(Concomitant::Gamma), U, Y, Z),
            f6u_yz: cross(ctx.engine.generic(Concomitant::F6u), U, Y, Z),
            xyz: br(X, Y, Z),
        }
    })
}

// ---------------------------------------------------------------- radicals

fn iota() -> Poly {
    Poly::var(VarId::bare(Family::Iota))
}

fn sigma() -> Poly {
    Poly::var(VarId::bare(Family::Sigma))
}

/// `ω = (−1 + ι σ)/2` with `ι² = −1`, `σ² = 3`.
fn omega() -> Poly {
    iota().mul(&sigma()).sub(&int(1)).scale(&q(1, 2))
}

/// Canonical form modulo `ι² = −1`, `σ² = 3`.
fn reduce_units(p: &Poly) -> Poly {
    let rules = [
        (Monomial::power(VarId::bare(Family::Iota), 2), int(-1)),
        (Monomial::power(VarId::bare(Family::Sigma), 2), int(3)),
    ];
    p.reduce(&rules)
}

fn symmetric_form() -> Poly {
    let [p, qq, s3, e] = symmetric_basis();
    Poly::sum(&[
        sym("a0").mul(&p),
        sym("b0").mul(&qq),
        sym("c0").mul(&s3),
        sym("d0").mul(&e),
    ])
}

// ---------------------------------------------------------------- registry

macro_rules! recipes {
    ($($id:literal => $body:expr),* $(,)?) => {
        fn table() -> Vec<(&'static str, Recipe)> {
            vec![$(($id, Box::new($body) as Recipe)),*]
        }
    };
}

fn registry() -> &'static FxHashMap<String, Recipe> {
    static REG: OnceLock<FxHashMap<String, Recipe>> = OnceLock::new();
    REG.get_or_init(|| {
        let mut m: FxHashMap<String, Recipe> = FxHashMap::default();
        for (id, r) in table() {
            m.insert(id.to_string(), r);
        }
        for kind in Concomitant::ALL {
            let n = crate::concomitants::Engine::standard().alternative_count(kind);
            for i in 0..n {
                let id = format!("alternative-{}-{}", alt_slug(kind), i + 1);
                m.insert(
                    id,
                    Box::new(move |ctx: &Context| {
                        let alts = ctx.engine.alternatives(kind);
                        Ok((alts[i].1.clone(), generic(ctx, kind)))
                    }),
                );
            }
        }
        for (ki, kn) in [(1u32, 1u32), (1, 2), (1, 3), (2, 2), (2, 3), (3, 3)] {
            m.insert(
                format!("factor-out-k{ki}-n{kn}"),
                Box::new(move |_: &Context| factor_out(ki, kn)),
            );
        }
        for kk in 1..=3u32 {
            m.insert(
                format!("lines-power-k{kk}"),
                Box::new(move |_: &Context| {
                    let (a, b, c) = (lin(A).pow(kk), lin(B).pow(kk), lin(C).pow(kk));
                    let lhs = j(kk, &a, &b, &c)?;
                    let f = factorial(kk);
                    Ok((lhs, br(A, B, C).pow(kk).scale(&k(f * f * f))))
                }),
            );
            m.insert(
                format!("derivative-substitution-k{kk}"),
                Box::new(move |_: &Context| {
                    let f = generic_cubic();
                    let lhs = substitute(&lin(A).pow(kk), &Substitution::symbol_power(A, kk, f.clone()))?;
                    let c = (0..kk).fold(1i64, |acc, i| acc * (3 - i as i64));
                    Ok((lhs, f.scale(&k(c))))
                }),
            );
        }
        m
    })
}

pub(crate) fn builder(id: &str) -> Option<&'static Recipe> {
    registry().get(id)
}

/// Ids with a registered recipe, sorted.
pub fn registered_ids() -> Vec<String> {
    let mut v: Vec<String> = registry().keys().cloned().collect();
    v.sort();
    v
}

fn alt_slug(k: Concomitant) -> &'static str {
    match k {
        Concomitant::Delta => "delta",
        Concomitant::Theta => "theta",
        Concomitant::SUuu => "s-uuu",
        Concomitant::TUuu => "t-uuu",
        Concomitant::S => "s",
        Concomitant::T => "t",
        Concomitant::Pi => "pi",
        Concomitant::Gamma => "gamma",
        Concomitant::F6u => "f6u",
    }
}

fn factor_out(kk: u32, n: u32) -> Result<Sides> {
    let f = generic_cubic();
    let g = generic_form(Family::G, X, kk as usize);
    let a = lin(A);
    let lhs = j(kk, &f, &g.mul(&a), &a.pow(n))?;
    let rhs = j(kk, &f, &g, &a.pow(kk))?
        .mul(&a.pow(n + 1 - kk))
        .scale(&k(binom(n, kk)));
    Ok((lhs, rhs))
}

/// `J3[f, p, q]` for the cubic `f` and products of powers of `a, b, c`.
fn j3(f: &Poly, p: &Poly, q: &Poly) -> Poly {
    j(3, f, p, q).expect("order 3")
}

fn mono_abc(ea: u32, eb: u32, ec: u32) -> Poly {
    prod(&[&lin(A).pow(ea), &lin(B).pow(eb), &lin(C).pow(ec)])
}

recipes! {
    "euler-cubic" => |_: &Context| {
        let f = generic_cubic();
        let g = gradient(&f);
        let lhs = Poly::sum(&(0..3).map(|i| g[i].mul(&Poly::var(VarId::x(i as u8 + 1)))).collect::<Vec<_>>());
        Ok((lhs, f.scale(&k(3))))
    },
    "incidence-line-coordinates" => |_: &Context| {
        Ok((cross(&ux(), U, Y, Z), br(X, Y, Z)))
    },
    "jacobian-of-lines" => |_: &Context| {
        Ok((jacobian(&lin(A), &lin(B), &lin(C)), br(A, B, C)))
    },

    // polars
    "polar-xxy" => |_: &Context| {
        let f = generic_cubic();
        Ok((polar_of(&f, X, &[Y], [2, 1, 0]), polar(&f, X, Y)))
    },
    "polar-xyy" => |_: &Context| {
        let f = generic_cubic();
        let xxy = polar_of(&f, X, &[Y], [2, 1, 0]);
        Ok((polar_of(&f, X, &[Y], [1, 2, 0]).scale(&k(2)), polar(&xxy, X, Y)))
    },
    "polar-yyy" => |_: &Context| {
        let f = generic_cubic();
        let xyy = polar_of(&f, X, &[Y], [1, 2, 0]);
        Ok((rename(&f, X, Y).scale(&k(3)), polar(&xyy, X, Y)))
    },
    "polar-back-xyy" => |_: &Context| {
        let f = generic_cubic();
        Ok((polar_of(&f, X, &[Y], [1, 2, 0]), polar(&rename(&f, X, Y), Y, X)))
    },
    "polar-back-xxy" => |_: &Context| {
        let f = generic_cubic();
        let xyy = polar_of(&f, X, &[Y], [1, 2, 0]);
        Ok((polar_of(&f, X, &[Y], [2, 1, 0]).scale(&k(2)), polar(&xyy, Y, X)))
    },
    "polar-back-xxx" => |_: &Context| {
        let f = generic_cubic();
        let xxy = polar_of(&f, X, &[Y], [2, 1, 0]);
        Ok((f.scale(&k(3)), polar(&xxy, Y, X)))
    },
    "polar-xyz" => |_: &Context| {
        let f = generic_cubic();
        let xyy = polar_of(&f, X, &[Y, Z], [1, 2, 0]);
        Ok((polar_of(&f, X, &[Y, Z], [1, 1, 1]), polar(&xyy, Y, Z)))
    },
    "polar-xzz-from-z" => |_: &Context| {
        let f = generic_cubic();
        let xyz = polar_of(&f, X, &[Y, Z], [1, 1, 1]);
        Ok((polar_of(&f, X, &[Y, Z], [1, 0, 2]).scale(&k(2)), polar(&xyz, Y, Z)))
    },
    "polar-xxz-from-x" => |_: &Context| {
        let f = generic_cubic();
        let xyz = polar_of(&f, X, &[Y, Z], [1, 1, 1]);
        Ok((polar_of(&f, X, &[Y, Z], [2, 0, 1]).scale(&k(2)), polar(&xyz, Y, X)))
    },
    "polar-double-descent" => |_: &Context| {
        let f = generic_cubic();
        let xyz = polar_of(&f, X, &[Y, Z], [1, 1, 1]);
        Ok((f.scale(&k(6)), polar(&polar(&xyz, Z, X), Y, X)))
    },
    "polar-double-ascent" => |_: &Context| {
        let f = generic_cubic();
        Ok((polar_of(&f, X, &[Y, Z], [1, 1, 1]), polar(&polar(&f, X, Z), X, Y)))
    },
    "polar-xxz-explicit" => |_: &Context| {
        let f = generic_cubic();
        let g = gradient(&f);
        let rhs = Poly::sum(&(0..3).map(|i| g[i].mul(&Poly::var(triple(Z)[i]))).collect::<Vec<_>>());
        Ok((polar_of(&f, X, &[Y, Z], [2, 0, 1]), rhs))
    },
    "polar-xyz-explicit" => |_: &Context| {
        let f = generic_cubic();
        let d = |i: u8, jj: u8| f.derive(VarId::x(i)).derive(VarId::x(jj));
        let y = |i: u8| Poly::var(VarId::indexed(Y, i));
        let z = |i: u8| Poly::var(VarId::indexed(Z, i));
        let mut parts = Vec::new();
        for i in 1..=3u8 {
            parts.push(prod(&[&y(i), &z(i), &d(i, i)]));
        }
        for (i, jj) in [(1u8, 2u8), (1, 3), (2, 3)] {
            parts.push(y(i).mul(&z(jj)).add(&y(jj).mul(&z(i))).mul(&d(i, jj)));
        }
        Ok((polar_of(&f, X, &[Y, Z], [1, 1, 1]), Poly::sum(&parts)))
    },
    "contraction-example" => |_: &Context| {
        let fu = generic_form(Family::BigF, U, 1);
        let lhs = contract_ux(&fu.mul(&quadratic()), 1);
        Ok((lhs, text("(2 F1 f11 + f12 F2 + f13 F3) x1 + (F1 f12 + 2 F2 f22 + f23 F3) x2 + (F1 f13 + F2 f23 + 2 F3 f33) x3")))
    },
    "bracket-square-expansion" => |_: &Context| {
        Ok((br(A, B, C).pow(2), text(BRACKET_SQUARE)))
    },
    "j2-explicit" => |_: &Context| {
        let (f, g, h) = (quadratic(), generic_form(Family::G, X, 2), generic_form(Family::H, X, 2));
        let table = text(BRACKET_SQUARE);
        // a_i a_j ↦ ∂_ij f, and likewise for b ↦ g and c ↦ h
        let mut parts = Vec::new();
        for (m, c) in table.terms() {
            let mut term = Poly::constant(c.clone());
            for (fam, form) in [(A, &f), (B, &g), (C, &h)] {
                let orders: Vec<(VarId, u32)> = (1..=3u8)
                    .filter_map(|i| {
                        let e = m.exponent(VarId::indexed(fam, i));
                        (e > 0).then(|| (VarId::x(i), e as u32))
                    })
                    .collect();
                term = term.mul(&form.derive_multi(&orders));
            }
            parts.push(term);
        }
        Ok((j(2, &f, &g, &h)?, Poly::sum(&parts)))
    },

    // transvectant and determinant
    "j2-hessian-determinant" => |_: &Context| {
        let f = generic_cubic();
        Ok((j(2, &f, &f, &f)?, hessian_determinant(&f).scale(&k(6))))
    },
    "j2-bordered-hessian" => |_: &Context| {
        let f = generic_cubic();
        Ok((j(2, &f, &f, &upow(2))?, bordered_hessian(&f).scale(&k(-4))))
    },

    // vanishing transvectants
    "power-vanishing-j1-a2" => |_: &Context| {
        let a = lin(A);
        Ok((j(1, &generic_cubic(), &a.pow(2), &a)?, Poly::zero()))
    },
    "power-vanishing-j1-a3" => |_: &Context| {
        let a = lin(A);
        Ok((j(1, &generic_cubic(), &a.pow(3), &a)?, Poly::zero()))
    },
    "power-vanishing-j2-ga-a3" => |_: &Context| {
        let a = lin(A);
        let g = generic_form(Family::G, X, 1);
        Ok((j(2, &generic_cubic(), &g.mul(&a), &a.pow(3))?, Poly::zero()))
    },
    "power-vanishing-j2-ga-a2" => |_: &Context| {
        let a = lin(A);
        let g = generic_form(Family::G, X, 1);
        Ok((j(2, &generic_cubic(), &g.mul(&a), &a.pow(2))?, Poly::zero()))
    },
    "power-vanishing-j2-ga2-a2" => |_: &Context| {
        let a = lin(A);
        let g = generic_form(Family::G, X, 1);
        Ok((j(2, &generic_cubic(), &g.mul(&a.pow(2)), &a.pow(2))?, Poly::zero()))
    },
    "power-vanishing-j3-gga-a3" => |_: &Context| {
        let a = lin(A);
        let g = generic_form(Family::G, X, 2);
        Ok((j(3, &generic_cubic(), &g.mul(&a), &a.pow(3))?, Poly::zero()))
    },
    "mixed-square-swap" => |_: &Context| {
        let (f, a, b) = (generic_cubic(), lin(A), lin(B));
        let ab = a.mul(&b);
        Ok((j(2, &f, &ab, &ab)?.scale(&k(2)), j(2, &f, &a.pow(2), &b.pow(2))?.neg()))
    },
    "j3-a2b-a2c" => |_: &Context| {
        Ok((j3(&generic_cubic(), &mono_abc(2, 1, 0), &mono_abc(2, 0, 1)), Poly::zero()))
    },
    "j3-ab2-ac2-cycle" => |_: &Context| {
        let f = generic_cubic();
        Ok((j3(&f, &mono_abc(1, 2, 0), &mono_abc(1, 0, 2)), j3(&f, &mono_abc(0, 1, 2), &mono_abc(2, 1, 0))))
    },

    // bases
    "basis-linear" => |_: &Context| {
        let (f, a, b, c) = (linear_f(), lin(A), lin(B), lin(C));
        let rhs = Poly::sum(&[
            j(1, &f, &b, &c)?.mul(&a),
            j(1, &f, &c, &a)?.mul(&b),
            j(1, &f, &a, &b)?.mul(&c),
        ]);
        Ok((br(A, B, C).mul(&f), rhs))
    },
    "basis-quadratic" => |_: &Context| {
        let (f, a, b, c) = (quadratic(), lin(A), lin(B), lin(C));
        let sq = |p: &Poly| p.pow(2);
        let rhs = combo(&[
            (1, j(2, &f, &sq(&b), &sq(&c))?.mul(&sq(&a))),
            (1, j(2, &f, &sq(&a), &sq(&c))?.mul(&sq(&b))),
            (1, j(2, &f, &sq(&a), &sq(&b))?.mul(&sq(&c))),
            (-2, j(2, &f, &a.mul(&b), &sq(&c))?.mul(&a.mul(&b))),
            (-2, j(2, &f, &a.mul(&c), &sq(&b))?.mul(&a.mul(&c))),
            (-2, j(2, &f, &b.mul(&c), &sq(&a))?.mul(&b.mul(&c))),
        ]);
        Ok((br(A, B, C).pow(2).mul(&f).scale(&k(8)), rhs))
    },
    "basis-cubic" => |_: &Context| {
        let f = generic_cubic();
        let m = mono_abc;
        let rhs = combo(&[
            (1, j3(&f, &m(0, 3, 0), &m(0, 0, 3)).mul(&m(3, 0, 0))),
            (1, j3(&f, &m(0, 0, 3), &m(3, 0, 0)).mul(&m(0, 3, 0))),
            (1, j3(&f, &m(3, 0, 0), &m(0, 3, 0)).mul(&m(0, 0, 3))),
            (3, j3(&f, &m(0, 0, 3), &m(1, 2, 0)).mul(&m(2, 1, 0))),
            (3, j3(&f, &m(0, 3, 0), &m(2, 0, 1)).mul(&m(1, 0, 2))),
            (3, j3(&f, &m(3, 0, 0), &m(0, 1, 2)).mul(&m(0, 2, 1))),
            (-3, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&m(0, 1, 2))),
            (-3, j3(&f, &m(0, 3, 0), &m(1, 0, 2)).mul(&m(2, 0, 1))),
            (-3, j3(&f, &m(0, 0, 3), &m(2, 1, 0)).mul(&m(1, 2, 0))),
            (9, j3(&f, &m(1, 2, 0), &m(1, 0, 2)).mul(&m(1, 1, 1))),
        ]);
        Ok((br(A, B, C).pow(3).mul(&f).scale(&k(216)), rhs))
    },
    "basis-j1-quadratic" => |_: &Context| {
        let (f, a, b, c) = (quadratic(), lin(A), lin(B), lin(C));
        let rhs = combo(&[
            (-1, j(2, &f, &a.mul(&c), &b.pow(2))?.mul(&a)),
            (-1, j(2, &f, &b.mul(&c), &a.pow(2))?.mul(&b)),
            (1, j(2, &f, &a.pow(2), &b.pow(2))?.mul(&c)),
        ]);
        Ok((br(A, B, C).mul(&j(1, &f, &a, &b)?).scale(&k(4)), rhs))
    },
    "basis-j1-cubic" => |_: &Context| {
        let (f, a, b, c) = (generic_cubic(), lin(A), lin(B), lin(C));
        let m = mono_abc;
        let rhs = combo(&[
            (3, j3(&f, &m(3, 0, 0), &m(0, 3, 0)).mul(&c.pow(2))),
            (6, j3(&f, &m(0, 3, 0), &m(2, 0, 1)).mul(&a.mul(&c))),
            (3, j3(&f, &m(3, 0, 0), &m(0, 1, 2)).mul(&b.pow(2))),
            (-6, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&b.mul(&c))),
            (-3, j3(&f, &m(0, 3, 0), &m(1, 0, 2)).mul(&a.pow(2))),
            (9, j3(&f, &m(1, 2, 0), &m(1, 0, 2)).mul(&a.mul(&b))),
        ]);
        Ok((br(A, B, C).pow(2).mul(&j(1, &f, &a, &b)?).scale(&k(216)), rhs))
    },
    "basis-j2-squares" => |_: &Context| {
        let (f, a, b, c) = (generic_cubic(), lin(A), lin(B), lin(C));
        let m = mono_abc;
        let rhs = combo(&[
            (1, j3(&f, &m(0, 3, 0), &m(2, 0, 1)).mul(&a)),
            (-1, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&b)),
            (1, j3(&f, &m(3, 0, 0), &m(0, 3, 0)).mul(&c)),
        ]);
        Ok((br(A, B, C).mul(&j(2, &f, &a.pow(2), &b.pow(2))?).scale(&k(9)), rhs))
    },
    "basis-j2-mixed" => |_: &Context| {
        let (f, a, b, c) = (generic_cubic(), lin(A), lin(B), lin(C));
        let m = mono_abc;
        let rhs = combo(&[
            (-3, j3(&f, &m(1, 2, 0), &m(1, 0, 2)).mul(&a)),
            (-2, j3(&f, &m(3, 0, 0), &m(0, 1, 2)).mul(&b)),
            (2, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&c)),
        ]);
        Ok((br(A, B, C).mul(&j(2, &f, &a.pow(2), &b.mul(&c))?).scale(&k(18)), rhs))
    },
    "order-raising-j2" => |_: &Context| {
        let (f, a, v, u) = (generic_cubic(), lin(A), lin(V), ux());
        let lhs = j(2, &f, &a.mul(&v), &u.pow(2))?;
        let rhs = j(1, &j(1, &f, &a, &u)?, &v, &u)?.scale(&k(4));
        Ok((lhs, rhs))
    },
    "order-raising-j3-av2" => |_: &Context| {
        let (f, a, v, u) = (generic_cubic(), lin(A), lin(V), ux());
        let lhs = j(3, &f, &a.mul(&v.pow(2)), &u.pow(3))?;
        let rhs = j(1, &j(2, &f, &a.mul(&v), &u.pow(2))?, &v, &u)?.scale(&k(9));
        Ok((lhs, rhs))
    },
    "order-raising-j3-a2v" => |_: &Context| {
        let (f, a, v, u) = (generic_cubic(), lin(A), lin(V), ux());
        let lhs = j(3, &f, &a.pow(2).mul(&v), &u.pow(3))?;
        let rhs = j(1, &j(2, &f, &a.pow(2), &u.pow(2))?, &v, &u)?.scale(&k(9));
        Ok((lhs, rhs))
    },

    // quadratic forms
    "quadratic-invariant" => |_: &Context| {
        let f = quadratic();
        Ok((j(2, &f, &f, &f)?, text("12 (4 f11 f22 f33 + f12 f23 f13 - f23^2 f11 - f13^2 f22 - f12^2 f33)")))
    },
    "quadratic-contravariant" => |_: &Context| {
        let f = quadratic();
        Ok((
            j(2, &f, &f, &upow(2))?,
            text("4 (4 f22 f33 - f23^2) u1^2 + 4 (4 f11 f33 - f13^2) u2^2 + 4 (4 f11 f22 - f12^2) u3^2 \
                  + 8 (f13 f23 - 2 f12 f33) u1 u2 + 8 (f12 f13 - 2 f11 f23) u2 u3 + 8 (f12 f23 - 2 f13 f22) u1 u3"),
        ))
    },
    "three-squares-contravariant" => |_: &Context| {
        let f = Poly::sum(&[sym("a0").mul(&lin(A).pow(2)), sym("b0").mul(&lin(B).pow(2)), sym("c0").mul(&lin(C).pow(2))]);
        let rhs = Poly::sum(&[
            prod(&[&sym("a0"), &sym("b0"), &br(A, B, U).pow(2)]),
            prod(&[&sym("b0"), &sym("c0"), &br(B, C, U).pow(2)]),
            prod(&[&sym("c0"), &sym("a0"), &br(C, A, U).pow(2)]),
        ])
        .scale(&k(16));
        Ok((j(2, &f, &f, &upow(2))?, rhs))
    },
    "three-squares-invariant" => |_: &Context| {
        let f = Poly::sum(&[sym("a0").mul(&lin(A).pow(2)), sym("b0").mul(&lin(B).pow(2)), sym("c0").mul(&lin(C).pow(2))]);
        let rhs = prod(&[&sym("a0"), &sym("b0"), &sym("c0"), &br(A, B, C).pow(2)]).scale(&k(48));
        Ok((j(2, &f, &f, &f)?, rhs))
    },
    "tangent-conic-invariant" => |_: &Context| {
        let f = lin(A).mul(&lin(B)).add(&sym("c0").mul(&lin(C).pow(2)));
        Ok((j(2, &f, &f, &f)?, sym("c0").mul(&br(A, B, C).pow(2)).scale(&k(-12))))
    },
    "tangent-conic-vanishing" => |_: &Context| {
        let f = lin(A).mul(&lin(B)).add(&sym("c0").mul(&lin(C).pow(2)));
        Ok((j(2, &f, &f, &lin(A).pow(2))?, Poly::zero()))
    },
    "conic-polar-g" => |_: &Context| {
        let (f, g) = conic_g();
        let lhs = g.scale(&k(4));
        let rhs = cross(&j(2, &f, &f, &upow(2))?, U, X, Y);
        Ok((lhs, rhs))
    },
    "conic-polar-g-contravariant" => |_: &Context| {
        let (f, g) = conic_g();
        let fyy = rename(&f, X, Y);
        let uy = incidence(U, Y);
        let lhs = j(2, &g, &g, &upow(2))?.scale(&k(3));
        let rhs = prod(&[&j(2, &f, &f, &f)?, &fyy, &uy.pow(2)]).scale(&k(16));
        Ok((lhs, rhs))
    },
    "conic-polar-g-invariant" => |_: &Context| {
        let (_, g) = conic_g();
        Ok((j(2, &g, &g, &g)?, Poly::zero()))
    },
    "conic-square-test-at-e3" => |_: &Context| {
        let (_, g) = conic_g();
        Ok((at(&g, Y, [0, 0, 1]), text("(4 f11 f33 - f13^2) x1^2 + 2 (2 f12 f33 - f13 f23) x1 x2 + (4 f22 f33 - f23^2) x2^2")))
    },
    "conic-tangent-line" => |_: &Context| {
        let f = quadratic();
        let a = lin(A);
        let ay = incidence(A, Y);
        let fyy = rename(&f, X, Y);
        let fxy = polar_of(&f, X, &[Y], [1, 1, 0]);
        let g = Poly::sum(&[a.pow(2).mul(&fyy), prod(&[&a, &ay, &fxy]).neg(), ay.pow(2).mul(&f)]);
        let lhs = j(2, &g, &g, &upow(2))?;
        let rhs = prod(&[&ay.pow(2), &incidence(U, Y).pow(2), &j(2, &f, &f, &a.pow(2))?]);
        Ok((lhs, rhs))
    },

    // the cubic
    "cube-test" => |ctx: &Context| {
        let f = generic_cubic();
        let th = generic(ctx, Concomitant::Theta);
        let fyyy = rename(&f, X, Y);
        let fxyy = polar_of(&f, X, &[Y], [1, 2, 0]);
        let lhs = fyyy.pow(2).mul(&f).scale(&k(27)).sub(&fxyy.pow(3)).scale(&k(4));
        let th_xy = polar_of(&th, X, &[Y], [1, 1, 0]);
        let th_yy = rename(&th, X, Y);
        let inner = fyyy.mul(&th_xy).scale(&k(3)).add(&fxyy.mul(&th_yy));
        Ok((lhs, cross(&inner, U, X, Y)))
    },
    "cube-test-at-e3" => |_: &Context| {
        let f = generic_cubic();
        let fyyy = rename(&f, X, Y);
        let fxyy = polar_of(&f, X, &[Y], [1, 2, 0]);
        let lhs = at(&fyyy.pow(2).mul(&f).scale(&k(27)).sub(&fxyy.pow(3)), Y, [0, 0, 1]);
        Ok((lhs, text(CUBE_TEST_AT_E3)))
    },
    "theta-contraction-vanishes" => |ctx: &Context| {
        Ok((contract_ux(&generic(ctx, Concomitant::Theta), 1), Poly::zero()))
    },
    "pi-contraction-vanishes" => |ctx: &Context| {
        Ok((contract_ux(&generic(ctx, Concomitant::Pi), 1), Poly::zero()))
    },
    "gamma-contraction-vanishes" => |ctx: &Context| {
        Ok((contract_ux(&generic(ctx, Concomitant::Gamma), 1), Poly::zero()))
    },
    "s-explicit" => |ctx: &Context| {
        Ok((generic(ctx, Concomitant::S), text(S_EXPLICIT)))
    },
    "hessian-cayleyan-square" => |ctx: &Context| {
        let (f, d, th, s) = (generic_cubic(), generic(ctx, Concomitant::Delta), generic(ctx, Concomitant::Theta), generic(ctx, Concomitant::SUuu));
        let rhs = j(2, &j(2, &d, &f, &upow(2))?, &th, &upow(2))?;
        Ok((s.pow(2).scale(&k(768)), rhs))
    },
    "hessian-square-contraction" => |ctx: &Context| {
        let (f, d, s) = (generic_cubic(), generic(ctx, Concomitant::Delta), generic(ctx, Concomitant::SUuu));
        let rhs = combo(&[
            (111, contract_ux(&s.mul(&f), 3).mul(&f.pow(2))),
            (-4, contract_ux(&s.mul(&f.pow(3)), 3)),
        ]);
        Ok((d.pow(2).scale(&k(18)), rhs))
    },
    "theta-v-invariant" => |ctx: &Context| {
        let th_v = rename(&generic(ctx, Concomitant::Theta), U, V);
        let s_v = rename(&generic(ctx, Concomitant::SUuu), U, V);
        Ok((j(2, &th_v, &th_v, &th_v)?, s_v.pow(2).scale(&k(192))))
    },
    "theta-v-transvectant" => |ctx: &Context| {
        let f = generic_cubic();
        let th_v = rename(&generic(ctx, Concomitant::Theta), U, V);
        let s = generic(ctx, Concomitant::SUuu);
        let d = generic(ctx, Concomitant::Delta);
        let s_uuv = polar_of(&s, U, &[V], [2, 1, 0]);
        let s_uvv = polar_of(&s, U, &[V], [1, 2, 0]);
        let d_xyz = polar_of(&d, X, &[Y, Z], [1, 1, 1]);
        let d_sub = cross(&cross(&d_xyz, Y, U, V), Z, U, V);
        let rhs = combo(&[(288, s_uuv.mul(&lin(V))), (-144, s_uvv.mul(&ux())), (36, d_sub)]);
        Ok((j(2, &f, &th_v, &upow(2))?.scale(&k(27)), rhs))
    },
    "cayleyan-f6u-contraction" => |ctx: &Context| {
        let s = generic(ctx, Concomitant::SUuu);
        let rhs = contract_ux(&generic(ctx, Concomitant::F6u).mul(ctx.engine.generic(Concomitant::Theta)), 2);
        Ok((s.pow(2).scale(&k(36)), rhs))
    },
    "apex-theta-discriminant" => |ctx: &Context| {
        let f = generic_cubic();
        let th_yy = rename(&generic(ctx, Concomitant::Theta), X, Y);
        let th_vv = rename(&th_yy, U, V);
        let th_uv = polar_of(&th_yy, U, &[V], [1, 1, 0]);
        let lhs = th_yy.mul(&th_vv).scale(&k(4)).sub(&th_uv.pow(2));
        let d_yyy = rename(&generic(ctx, Concomitant::Delta), X, Y);
        let fxxy = cross(&polar_of(&f, X, &[Y], [2, 1, 0]), X, U, V);
        Ok((lhs, d_yyy.mul(&fxxy).scale(&k(16))))
    },
    "apex-theta-gradient" => |ctx: &Context| {
        let f = generic_cubic();
        let d = generic(ctx, Concomitant::Delta);
        let th_yy = rename(&generic(ctx, Concomitant::Theta), X, Y);
        let lhs = to_gradient(&th_yy, U, &f);
        let p = |g: &Poly, e: [u16; 3]| polar_of(g, X, &[Y], e);
        let rhs = combo(&[
            (3, f.mul(&p(&d, [1, 2, 0]))),
            (-1, p(&f, [2, 1, 0]).mul(&p(&d, [2, 1, 0]))),
            (1, p(&f, [1, 2, 0]).mul(&d)),
        ]);
        Ok((lhs, rhs))
    },
    "hessian-j3-vanishes" => |ctx: &Context| {
        Ok((j(3, &generic_cubic(), &generic(ctx, Concomitant::Delta), &upow(3))?, Poly::zero()))
    },

    // symbolic products a_x b_x c_x
    "product-delta" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::Delta)?, br(A, B, C).pow(2).mul(&symbolic_product())))
    },
    "product-theta" => |ctx: &Context| {
        let rhs = br(A, B, C).pow(2).mul(&upow(2)).sub(
            &Poly::sum(&[
                br(B, C, U).pow(2).mul(&lin(A).pow(2)),
                br(C, A, U).pow(2).mul(&lin(B).pow(2)),
                br(A, B, U).pow(2).mul(&lin(C).pow(2)),
            ])
            .scale(&k(2)),
        );
        Ok((ctx.product(Concomitant::Theta)?, rhs))
    },
    "product-s-uuu" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::SUuu)?, br(A, B, C).mul(&triangle())))
    },
    "product-s" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::S)?, br(A, B, C).pow(4)))
    },
    "product-t-uuu" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::TUuu)?, br(A, B, C).pow(3).mul(&triangle())))
    },
    "product-t" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::T)?, br(A, B, C).pow(6)))
    },
    "product-f6u" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::F6u)?, triangle().pow(2)))
    },
    "product-pi" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::Pi)?, Poly::zero()))
    },
    "product-gamma" => |ctx: &Context| {
        Ok((ctx.product(Concomitant::Gamma)?, Poly::zero()))
    },
    "product-s3-t2" => |ctx: &Context| {
        let (s, t) = (ctx.product(Concomitant::S)?, ctx.product(Concomitant::T)?);
        Ok((s.pow(3), t.pow(2)))
    },
    "product-s-delta-t-f" => |ctx: &Context| {
        let (s, t, d) = (ctx.product(Concomitant::S)?, ctx.product(Concomitant::T)?, ctx.product(Concomitant::Delta)?);
        Ok((s.mul(&d), t.mul(&symbolic_product())))
    },
    "product-s-tuuu-t-suuu" => |ctx: &Context| {
        let (s, t) = (ctx.product(Concomitant::S)?, ctx.product(Concomitant::T)?);
        let (su, tu) = (ctx.product(Concomitant::SUuu)?, ctx.product(Concomitant::TUuu)?);
        Ok((s.mul(&tu), t.mul(&su)))
    },
    "product-t-delta-s2-f" => |ctx: &Context| {
        let (s, t, d) = (ctx.product(Concomitant::S)?, ctx.product(Concomitant::T)?, ctx.product(Concomitant::Delta)?);
        Ok((t.mul(&d), s.pow(2).mul(&symbolic_product())))
    },
    "product-s-suuu2-t-f6u" => |ctx: &Context| {
        let (s, t) = (ctx.product(Concomitant::S)?, ctx.product(Concomitant::T)?);
        let (su, ff) = (ctx.product(Concomitant::SUuu)?, ctx.product(Concomitant::F6u)?);
        Ok((s.mul(&su.pow(2)), t.mul(&ff)))
    },
    "product-hessian-theta" => |ctx: &Context| {
        let (s, d, th) = (ctx.product(Concomitant::S)?, ctx.product(Concomitant::Delta)?, ctx.product(Concomitant::Theta)?);
        Ok((j(2, &d, &d, &upow(2))?, s.mul(&th).scale(&k(4))))
    },
    "product-s-f6u-suuu-tuuu" => |ctx: &Context| {
        let (s, ff) = (ctx.product(Concomitant::S)?, ctx.product(Concomitant::F6u)?);
        let (su, tu) = (ctx.product(Concomitant::SUuu)?, ctx.product(Concomitant::TUuu)?);
        Ok((s.mul(&ff), su.mul(&tu)))
    },

    // sums of two cubes
    "two-cubes-f6u" => |ctx: &Context| {
        let f = two_cubes();
        let lhs = ctx.engine.evaluate(Concomitant::F6u, &f)?;
        let rhs = prod(&[&sym("a0").pow(2), &sym("b0").pow(2), &br(A, B, U).pow(6)]).scale(&k(-27));
        Ok((lhs, rhs))
    },
    "two-cubes-theta" => |ctx: &Context| {
        let f = two_cubes();
        let lhs = ctx.engine.evaluate(Concomitant::Theta, &f)?;
        let rhs = prod(&[&sym("a0"), &sym("b0"), &br(A, B, U).pow(2), &lin(A), &lin(B)]).scale(&k(36));
        Ok((lhs, rhs))
    },

    // tangent lines along y z
    "tangent-product-in-polars" => |_: &Context| {
        // f_xyy, f_xyz, f_xzz as free symbols h1, h2, h3
        let (h1, h2, h3) = (sym("h1"), sym("h2"), sym("h3"));
        let s = |n: &str| sym(n);
        let tangent = |p1: &str, p2: &str| {
            Poly::sum(&[h1.mul(&s(p2).pow(2)), prod(&[&h2, &s(p1), &s(p2)]).neg(), h3.mul(&s(p1).pow(2))])
        };
        let lhs = prod(&[&tangent("a1", "a2"), &tangent("b1", "b2"), &tangent("c1", "c2")]);
        let (a1, a2, b1, b2, c1, c2) = (s("a1"), s("a2"), s("b1"), s("b2"), s("c1"), s("c2"));
        let yyy = prod(&[&a1, &b1, &c1]);
        let zzz = prod(&[&a2, &b2, &c2]);
        let yyz = Poly::sum(&[prod(&[&a2, &b1, &c1]), prod(&[&a1, &b2, &c1]), prod(&[&a1, &b1, &c2])]);
        let yzz = Poly::sum(&[prod(&[&a2, &b2, &c1]), prod(&[&a2, &b1, &c2]), prod(&[&a1, &b2, &c2])]);
        let rhs = tangent_from_polars(&[h1.clone(), h2.clone(), h3.clone(), yyy, yyz, yzz, zzz]);
        Ok((lhs, rhs))
    },
    "tangent-product" => |ctx: &Context| {
        let t = tangent_parts(ctx);
        let lhs = t.tangent_product.add(&t.delta_binary.mul(&generic_cubic()));
        Ok((lhs, t.xyz.pow(2).mul(&t.gamma_yz)))
    },
    "tangent-product-transfer" => |ctx: &Context| {
        let t = tangent_parts(ctx);
        let lhs = t.tangent_product.add(&t.f6u_yz.mul(&generic_cubic()));
        Ok((lhs, t.xyz.pow(2).mul(&t.gamma_yz)))
    },
    "discriminant-transfer" => |ctx: &Context| {
        let t = tangent_parts(ctx);
        Ok((t.delta_binary.clone(), t.f6u_yz.clone()))
    },
    "reducibility-s-gamma" => |ctx: &Context| {
        let f = generic_cubic();
        let (s, ff, su, tu, g) = (
            generic(ctx, Concomitant::S),
            generic(ctx, Concomitant::F6u),
            generic(ctx, Concomitant::SUuu),
            generic(ctx, Concomitant::TUuu),
            generic(ctx, Concomitant::Gamma),
        );
        let w = s.mul(&ff).sub(&su.mul(&tu)).mul(&f);
        let rhs = contract_ux(&w, 2).scale(&k(6)).sub(&contract_ux(&w, 3).mul(&ux()));
        Ok((s.mul(&g).scale(&k(432)), rhs))
    },
    "reducibility-s-delta" => |ctx: &Context| {
        let f = generic_cubic();
        let (s, t, d, th) = (
            generic(ctx, Concomitant::S),
            generic(ctx, Concomitant::T),
            generic(ctx, Concomitant::Delta),
            generic(ctx, Concomitant::Theta),
        );
        let w = j(2, &d, &d, &upow(2))?.sub(&s.mul(&th).scale(&k(4))).mul(&f);
        Ok((s.mul(&d).sub(&t.mul(&f)), contract_ux(&w, 2).scale(&q(-1, 96))))
    },

    // the line u = (0, 0, 1)
    "special-line-f6u" => |ctx: &Context| {
        let lhs = at(&generic(ctx, Concomitant::F6u), U, [0, 0, 1]);
        let c = |s: &str| sym(s);
        Ok((lhs, discriminant(&c("f111"), &c("f112"), &c("f122"), &c("f222"))))
    },
    "gamma-from-delta-theta" => |ctx: &Context| {
        let w = j(2, &generic(ctx, Concomitant::Delta), &generic(ctx, Concomitant::Theta), &upow(2))?;
        let rhs = w.scale(&k(14)).sub(&contract_ux(&w.mul(&ux()), 1));
        Ok((generic(ctx, Concomitant::Gamma).scale(&k(2304)), rhs))
    },
    "special-line-f6u-theta" => |ctx: &Context| {
        let th = generic(ctx, Concomitant::Theta);
        let t = |s: [u8; 4]| theta_part(&th, s);
        let rhs = t([3, 3, 1, 1]).mul(&t([3, 3, 2, 2])).scale(&k(4)).sub(&t([3, 3, 1, 2]).pow(2));
        Ok((at(&generic(ctx, Concomitant::F6u), U, [0, 0, 1]).scale(&k(48)), rhs))
    },
    "special-line-gamma" => |ctx: &Context| {
        let d = generic(ctx, Concomitant::Delta);
        let th = generic(ctx, Concomitant::Theta);
        let dd = |s: [u8; 3]| cubic_part(&d, s);
        let t = |s: [u8; 4]| theta_part(&th, s);
        let x = |i: u8| Poly::var(VarId::x(i));
        let e1 = combo(&[
            (1, dd([1, 2, 2]).mul(&t([3, 3, 1, 1]))),
            (-1, dd([1, 1, 2]).mul(&t([3, 3, 1, 2]))),
            (3, dd([1, 1, 1]).mul(&t([3, 3, 2, 2]))),
        ]);
        let e2 = combo(&[
            (3, dd([2, 2, 2]).mul(&t([3, 3, 1, 1]))),
            (-1, dd([1, 2, 2]).mul(&t([3, 3, 1, 2]))),
            (1, dd([1, 1, 2]).mul(&t([3, 3, 2, 2]))),
        ]);
        let e3 = combo(&[
            (1, dd([1, 2, 2]).mul(&t([1, 3, 1, 1]))),
            (-1, dd([1, 1, 2]).mul(&t([1, 3, 1, 2]))),
            (3, dd([1, 1, 1]).mul(&t([1, 3, 2, 2]))),
            (3, dd([2, 2, 2]).mul(&t([2, 3, 1, 1]))),
            (-1, dd([1, 2, 2]).mul(&t([2, 3, 1, 2]))),
            (1, dd([1, 1, 2]).mul(&t([2, 3, 2, 2]))),
            (-4, dd([2, 2, 3]).mul(&t([3, 3, 1, 1]))),
            (2, dd([1, 2, 3]).mul(&t([3, 3, 1, 2]))),
            (-4, dd([1, 1, 3]).mul(&t([3, 3, 2, 2]))),
        ]);
        let rhs = combo(&[(6, e1.mul(&x(1))), (6, e2.mul(&x(2))), (-1, e3.mul(&x(3)))]);
        Ok((at(&generic(ctx, Concomitant::Gamma), U, [0, 0, 1]).scale(&k(288)), rhs))
    },
    "corollary-f6u" => |ctx: &Context| {
        let lhs = at(&corollary_specialize(&generic(ctx, Concomitant::F6u)), U, [0, 0, 1]);
        Ok((lhs, text("f112^2 f122^2")))
    },
    "corollary-gamma" => |ctx: &Context| {
        let lhs = at(&corollary_specialize(&generic(ctx, Concomitant::Gamma)), U, [0, 0, 1]);
        Ok((lhs, text(
            "f122^2 (f113^2 f122 - f112 f113 f123 + f112^2 f133) x1 \
             + f112^2 (f112 f223^2 - f122 f123 f223 + f122^2 f233) x2 \
             + (f113^2 f122^2 f223 - f112 f113 f122 f123 f223 + f112^2 f113 f223^2 + f112^2 f122^2 f333) x3",
        )))
    },
    "corollary-tangent-product" => |_: &Context| {
        let f = corollary_specialize(&generic_cubic());
        let l = tangent_from_polars(&line_polars(&f));
        let lhs = at(&at(&l, Y, [1, 0, 0]), Z, [0, 1, 0]);
        Ok((lhs, text(
            "-(f112 x2 + f113 x3) (f122 x1 + f223 x3) \
             (f112 f122 (f112 x1 + f122 x2) + (f112 f122 f123 - f112^2 f223 - f113 f122^2) x3)",
        )))
    },

    // f333 ≠ 0
    "brill-relation-u1-cubed" => |_: &Context| brill_relation([1, 1, 1], "-72 (3 f333 g222 + f223 g233)"),
    "brill-relation-u1-sq-u2" => |_: &Context| brill_relation([1, 1, 2], "72 (3 f333 g122 + f223 g133 + f123 g233)"),
    "brill-relation-u1-u2-sq" => |_: &Context| brill_relation([1, 2, 2], "-72 (3 f333 g112 + f123 g133 + f113 g233)"),
    "brill-relation-u2-cubed" => |_: &Context| brill_relation([2, 2, 2], "72 (3 f333 g111 + f113 g133)"),
    "brioschi-delta333" => |ctx: &Context| {
        let d = brioschi_specialize(&generic(ctx, Concomitant::Delta));
        Ok((cubic_part(&d, [3, 3, 3]), text("3 (4 f113 f223 - f123^2) f333")))
    },
    "brioschi-relation-113" => |ctx: &Context| brioschi_relation(ctx, [1, 1, 3], "f113 (4 f113 f223 - f123^2) + 3 (f112^2 - 3 f111 f122) f333"),
    "brioschi-relation-123" => |ctx: &Context| brioschi_relation(ctx, [1, 2, 3], "f123 (4 f113 f223 - f123^2) + 3 (f112 f122 - 9 f111 f222) f333"),
    "brioschi-relation-223" => |ctx: &Context| brioschi_relation(ctx, [2, 2, 3], "f223 (4 f113 f223 - f123^2) + 3 (f122^2 - 3 f112 f222) f333"),

    // forms unchanged by even permutations
    "symmetric-hessian" => |ctx: &Context| {
        let f = symmetric_form();
        let e = symmetric_basis()[3].clone();
        let kk = text("(27 a0^2 + b0^2) c0 + d0^3");
        let rhs = combo(&[(81, sym("d0").pow(2).mul(&f)), (-108, kk.mul(&e))]);
        Ok((ctx.engine.evaluate(Concomitant::Delta, &f)?, rhs))
    },
    "symmetric-f6u-sum-line" => |ctx: &Context| {
        let lhs = at(&ctx.engine.evaluate(Concomitant::F6u, &symmetric_form())?, U, [1, 1, 1]);
        Ok((lhs, text("729 (27 a0^2 + b0^2)^2")))
    },
    "symmetric-line-restriction" => |_: &Context| {
        let (y, z) = omega_points();
        let w = |i: u8| Poly::var(VarId::indexed(Family::BigX, i));
        let b: FxHashMap<VarId, Poly> = (0..3)
            .map(|i| (VarId::x(i as u8 + 1), w(1).mul(&y[i]).add(&w(2).mul(&z[i]))))
            .collect();
        let lhs = reduce_units(&map_vars(&symmetric_form(), &b));
        let rhs = reduce_units(&text("3 ((9 a0 - ι σ b0) X1^3 + (9 a0 + ι σ b0) X2^3)"));
        Ok((lhs, rhs))
    },
    "symmetric-polar-xyy" => |_: &Context| {
        symmetric_polar([1, 2, 0], "3 (9 a0 - ι σ b0)", [0, 2, 1])
    },
    "symmetric-polar-xyz" => |_: &Context| {
        symmetric_polar([1, 1, 1], "9 d0", [0, 0, 0])
    },
    "symmetric-polar-xzz" => |_: &Context| {
        symmetric_polar([1, 0, 2], "3 (9 a0 + ι σ b0)", [0, 1, 2])
    },
    "symmetric-radical-factorization" => |_: &Context| {
        // a, b, c, d expressed through the radicals α1, α2, γ:
        // 9a = (α1³ + α2³)/2, i√3 b = (α2³ − α1³)/2, 9c = γ³, 3d = −α1 α2 γ
        let (a1, a2, g) = (sym("α1"), sym("α2"), sym("γ"));
        let a = a1.pow(3).add(&a2.pow(3)).scale(&q(1, 18));
        let b = iota().mul(&sigma()).mul(&a1.pow(3).sub(&a2.pow(3))).scale(&q(1, 6));
        let c = g.pow(3).scale(&q(1, 9));
        let d = prod(&[&a1, &a2, &g]).scale(&q(-1, 3));
        let bind: FxHashMap<VarId, Poly> = [("a0", a), ("b0", b), ("c0", c), ("d0", d)]
            .into_iter()
            .map(|(n, p)| (VarId::parse(n).expect("symbol"), p))
            .collect();
        let lhs = reduce_units(&map_vars(&symmetric_form(), &bind).scale(&k(9)));
        let w = omega();
        let w2 = reduce_units(&w.pow(2));
        let one = int(1);
        let s = Poly::sum(&[Poly::var(VarId::x(1)), Poly::var(VarId::x(2)), Poly::var(VarId::x(3))]);
        let line3 = |c: [&Poly; 3]| {
            Poly::sum(&(0..3).map(|i| c[i].mul(&Poly::var(VarId::x(i as u8 + 1)))).collect::<Vec<_>>())
        };
        let factor = |u: [&Poly; 3], v: [&Poly; 3]| {
            Poly::sum(&[a1.mul(&line3(u)), g.mul(&s), a2.mul(&line3(v))])
        };
        let fa = factor([&one, &w2, &w], [&one, &w, &w2]);
        let fb = factor([&w2, &w, &one], [&w, &w2, &one]);
        let fc = factor([&w, &one, &w2], [&w2, &one, &w]);
        let rhs = reduce_units(&prod(&[&fa, &fb, &fc]));
        Ok((lhs, rhs))
    },
    "sum-of-cubes-factorization" => |_: &Context| {
        let e = symmetric_basis()[3].clone();
        let w = omega();
        let w2 = reduce_units(&w.pow(2));
        let x = |i: u8| Poly::var(VarId::x(i));
        let f1 = Poly::sum(&[x(1), x(2), x(3)]);
        let f2 = Poly::sum(&[x(1), w.mul(&x(2)), w2.mul(&x(3))]);
        let f3 = Poly::sum(&[x(1), w2.mul(&x(2)), w.mul(&x(3))]);
        Ok((e, reduce_units(&prod(&[&f1, &f2, &f3]))))
    },

    // contraction displays inside proofs
    "contraction-cube-vanishing" => |_: &Context| {
        let f = generic_cubic();
        let m = mono_abc;
        let lhs = contract_ux(&j3(&f, &m(3, 0, 0), &upow(3)).mul(&m(0, 3, 3)), 3);
        let rhs = combo(&[
            (1, j3(&f, &m(3, 0, 0), &m(0, 3, 0)).mul(&m(0, 0, 3))),
            (-1, j3(&f, &m(0, 0, 3), &m(3, 0, 0)).mul(&m(0, 3, 0))),
            (9, j3(&f, &m(3, 0, 0), &m(0, 1, 2)).mul(&m(0, 2, 1))),
            (9, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&m(0, 1, 2))),
        ]);
        Ok((lhs, rhs.scale(&k(36))))
    },
    "contraction-conic-two-squares" => |_: &Context| {
        let (f, a, b, c) = (quadratic(), lin(A), lin(B), lin(C));
        let ab = a.mul(&b);
        let lhs = contract_ux(&j(2, &f, &ab, &upow(2))?.mul(&ab).mul(&c.pow(2)), 2);
        let rhs = combo(&[
            (4, j(2, &f, &ab, &c.pow(2))?.mul(&ab)),
            (-2, j(2, &f, &a.pow(2), &b.pow(2))?.mul(&c.pow(2))),
            (-4, j(2, &f, &a.mul(&c), &b.pow(2))?.mul(&a.mul(&c))),
            (-4, j(2, &f, &b.mul(&c), &a.pow(2))?.mul(&b.mul(&c))),
        ]);
        Ok((lhs, rhs))
    },
    "contraction-cubic-two-cubes" => |_: &Context| {
        let (f, a, b, c) = (generic_cubic(), lin(A), lin(B), lin(C));
        let m = mono_abc;
        let inner = j(2, &f, &a.mul(&b), &upow(2))?.mul(&ux()).mul(&c);
        let lhs = contract_ux(&j(1, &inner, &m(2, 0, 1), &m(0, 2, 1))?, 3);
        let rhs = combo(&[
            (-2, j3(&f, &m(3, 0, 0), &m(0, 3, 0)).mul(&m(0, 0, 3))),
            (-1, j3(&f, &m(0, 0, 3), &m(1, 2, 0)).mul(&m(2, 1, 0))),
            (5, j3(&f, &m(0, 3, 0), &m(2, 0, 1)).mul(&m(1, 0, 2))),
            (1, j3(&f, &m(3, 0, 0), &m(0, 1, 2)).mul(&m(0, 2, 1))),
            (-5, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&m(0, 1, 2))),
            (-1, j3(&f, &m(0, 3, 0), &m(1, 0, 2)).mul(&m(2, 0, 1))),
            (1, j3(&f, &m(0, 0, 3), &m(2, 1, 0)).mul(&m(1, 2, 0))),
            (-12, j3(&f, &m(1, 2, 0), &m(1, 0, 2)).mul(&m(1, 1, 1))),
        ]);
        Ok((lhs, rhs.scale(&k(24))))
    },
    "contraction-three-lines" => |_: &Context| {
        let f = generic_cubic();
        let m = mono_abc;
        let lhs = contract_ux(&j3(&f, &m(1, 1, 1), &upow(3)).mul(&m(2, 2, 2)), 3);
        let rhs = combo(&[
            (1, j3(&f, &m(0, 0, 3), &m(1, 2, 0)).mul(&m(2, 1, 0))),
            (1, j3(&f, &m(0, 3, 0), &m(2, 0, 1)).mul(&m(1, 0, 2))),
            (1, j3(&f, &m(3, 0, 0), &m(0, 1, 2)).mul(&m(0, 2, 1))),
            (1, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&m(0, 1, 2))),
            (1, j3(&f, &m(0, 3, 0), &m(1, 0, 2)).mul(&m(2, 0, 1))),
            (1, j3(&f, &m(0, 0, 3), &m(2, 1, 0)).mul(&m(1, 2, 0))),
        ]);
        Ok((lhs, rhs.scale(&k(24))))
    },
    "contraction-square-times-line" => |_: &Context| {
        let f = generic_cubic();
        let m = mono_abc;
        let lhs = contract_ux(&j3(&f, &m(2, 1, 0), &upow(3)).mul(&m(1, 2, 3)), 3);
        let rhs = combo(&[
            (-1, j3(&f, &m(3, 0, 0), &m(0, 3, 0)).mul(&m(0, 0, 3))),
            (3, j3(&f, &m(0, 3, 0), &m(2, 0, 1)).mul(&m(1, 0, 2))),
            (-3, j3(&f, &m(3, 0, 0), &m(0, 1, 2)).mul(&m(0, 2, 1))),
            (-3, j3(&f, &m(0, 0, 3), &m(2, 1, 0)).mul(&m(1, 2, 0))),
            (-6, j3(&f, &m(3, 0, 0), &m(0, 2, 1)).mul(&m(0, 1, 2))),
            (-18, j3(&f, &m(1, 2, 0), &m(1, 0, 2)).mul(&m(1, 1, 1))),
        ]);
        Ok((lhs, rhs.scale(&k(12))))
    },
}

/// `[abu][bcu][cau]`.
fn triangle() -> Poly {
    prod(&[&br(A, B, U), &br(B, C, U), &br(C, A, U)])
}

fn two_cubes() -> Poly {
    sym("a0").mul(&lin(A).pow(3)).add(&sym("b0").mul(&lin(B).pow(3)))
}

/// The generic conic and `g = 4 f_yy f − f_xy²`.
fn conic_g() -> (Poly, Poly) {
    let f = quadratic();
    let fyy = rename(&f, X, Y);
    let fxy = polar_of(&f, X, &[Y], [1, 1, 0]);
    let g = fyy.mul(&f).scale(&k(4)).sub(&fxy.pow(2));
    (f, g)
}

fn set_zero(p: &Poly, names: &[&str]) -> Poly {
    let b: FxHashMap<VarId, Poly> = names
        .iter()
        .map(|n| (VarId::parse(n).expect("symbol"), Poly::zero()))
        .collect();
    map_vars(p, &b)
}

fn corollary_specialize(p: &Poly) -> Poly {
    set_zero(p, &["f111", "f222"])
}

fn brioschi_specialize(p: &Poly) -> Poly {
    set_zero(p, &["f133", "f233"])
}

/// Coefficient of `u^sub` in `J3[f, g, u³]` once `g113 = g123 = g223 =
/// g333 = 0`.
fn brill_relation(sub: [u8; 3], relation: &str) -> Result<Sides> {
    let g = set_zero(&generic_form(Family::G, X, 3), &["g113", "g123", "g223", "g333"]);
    let jj = j(3, &generic_cubic(), &g, &upow(3))?;
    Ok((coeff_in(&jj, &[U], &umono(&sub)), text(relation)))
}

/// With `f133 = f233 = 0`, the coefficient `g_sub` of
/// `g = Δ333 f − f333 Δ` against `4 f333 · relation`.
fn brioschi_relation(ctx: &Context, sub: [u8; 3], relation: &str) -> Result<Sides> {
    let f = brioschi_specialize(&generic_cubic());
    let d = brioschi_specialize(&generic(ctx, Concomitant::Delta));
    let g = cubic_part(&d, [3, 3, 3]).mul(&f).sub(&sym("f333").mul(&d));
    Ok((cubic_part(&g, sub), sym("f333").mul(&text(relation)).scale(&k(4))))
}

/// `y = (1, ω, ω²)` and `z = (1, ω², ω)`.
fn omega_points() -> ([Poly; 3], [Poly; 3]) {
    let w = omega();
    let w2 = reduce_units(&w.pow(2));
    ([int(1), w.clone(), w2.clone()], [int(1), w2, w])
}

/// A polar of the symmetric form on the line through the ω-points against
/// `scalar · (x1 + ω^e1 x2 + ω^e2 x3)`-type linear forms, where `powers`
/// lists the ω-exponents of the three coefficients (all zero gives the sum).
fn symmetric_polar(exps: [u16; 3], scalar: &str, powers: [u32; 3]) -> Result<Sides> {
    let (y, z) = omega_points();
    let p = polar_of(&symmetric_form(), X, &[Y, Z], exps);
    let pb = |fam: Family, pt: &[Poly; 3]| -> FxHashMap<VarId, Poly> {
        triple(fam).into_iter().zip(pt.iter().cloned()).collect()
    };
    let lhs = reduce_units(&map_vars(&map_vars(&p, &pb(Y, &y)), &pb(Z, &z)));
    let w = omega();
    let line = Poly::sum(
        &(0..3)
            .map(|i| reduce_units(&w.pow(powers[i])).mul(&Poly::var(VarId::x(i as u8 + 1))))
            .collect::<Vec<_>>(),
    );
    Ok((lhs, reduce_units(&text(scalar).mul(&line))))
}

const BRACKET_SQUARE: &str = "a3^2 b2^2 c1^2 - 2 a2 a3 b2 b3 c1^2 + a2^2 b3^2 c1^2 - 2 a3^2 b1 b2 c1 c2 + 2 a2 a3 b1 b3 c1 c2 \
    + 2 a1 a3 b2 b3 c1 c2 - 2 a1 a2 b3^2 c1 c2 + a3^2 b1^2 c2^2 - 2 a1 a3 b1 b3 c2^2 + a1^2 b3^2 c2^2 \
    + 2 a2 a3 b1 b2 c1 c3 - 2 a1 a3 b2^2 c1 c3 - 2 a2^2 b1 b3 c1 c3 + 2 a1 a2 b2 b3 c1 c3 \
    - 2 a2 a3 b1^2 c2 c3 + 2 a1 a3 b1 b2 c2 c3 + 2 a1 a2 b1 b3 c2 c3 - 2 a1^2 b2 b3 c2 c3 \
    + a2^2 b1^2 c3^2 - 2 a1 a2 b1 b2 c3^2 + a1^2 b2^2 c3^2";

const CUBE_TEST_AT_E3: &str = "(27 f111 f333^2 - f133^3) x1^3 + (27 f222 f333^2 - f233^3) x2^3 \
    + 3 (9 f122 f333^2 - f133 f233^2) x1 x2^2 + 3 (9 f112 f333^2 - f133^2 f233) x1^2 x2 \
    + 9 f333 (3 f113 f333 - f133^2) x1^2 x3 + 9 f333 (3 f223 f333 - f233^2) x2^2 x3 \
    + 9 f333 (3 f123 f333 - 2 f133 f233) x1 x2 x3";

const S_EXPLICIT: &str = "f123^4 - 8 f122 f123^2 f133 + 16 f122^2 f133^2 + 24 f113 f123 f133 f222 - 48 f112 f133^2 f222 \
    - 8 f113 f123^2 f223 - 16 f113 f122 f133 f223 + 24 f112 f123 f133 f223 + 16 f113^2 f223^2 \
    - 48 f111 f133 f223^2 + 24 f113 f122 f123 f233 - 8 f112 f123^2 f233 - 16 f112 f122 f133 f233 \
    - 48 f113^2 f222 f233 + 144 f111 f133 f222 f233 - 16 f112 f113 f223 f233 \
    + 24 f111 f123 f223 f233 + 16 f112^2 f233^2 - 48 f111 f122 f233^2 \
    - 48 f113 f122^2 f333 + 24 f112 f122 f123 f333 + 144 f112 f113 f222 f333 \
    - 216 f111 f123 f222 f333 - 48 f112^2 f223 f333 + 144 f111 f122 f223 f333";
