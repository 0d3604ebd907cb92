//! Exact calculus of ternary cubic forms: sparse rational polynomials,
//! polars and transvectants, the classical concomitants of a cubic, decision
//! procedures for complete reducibility, and numeric factorization into
//! linear forms.

pub mod calculus;
pub mod classify;
pub mod concomitants;
pub mod corpus;
pub mod error;
pub mod factor;
pub mod forms;
pub mod linalg;
pub mod monomial;
pub mod parse;
pub mod numeric;
pub mod poly;
pub mod quadratics;
pub mod rational;
pub mod subst;
pub mod symmetry;
pub mod var;

pub use concomitants::{Concomitant, ConcomitantSet, Engine, Prefactors};
pub use error::{Error, Result};
pub use forms::{CubicForm, LinearForm, QuadraticForm};
pub use monomial::Monomial;
pub use parse::{parse, render};
pub use poly::Poly;
pub use rational::Rational;
pub use subst::{substitute, Substitution};
pub use var::{Family, VarId};
