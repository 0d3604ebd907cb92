//! Text and JSON forms of polynomials.
//!
//! Grammar (whitespace is insignificant except as a product separator):
//!
//! ```text
//! expr   := [sign] term (sign term)*
//! term   := factor ([*] factor)*
//! factor := atom [^ integer]
//! atom   := integer [/ integer] | variable | ( expr )
//! ```
//!
//! Variables are a family name followed by its subscript digits (`x1`, `f123`,
//! `Δ113` or `D113`, `θ3312` or `th3312`, `ω` or `w`). Adjacent variables may be
//! written without a separator (`x1x2`). `−` is accepted as a minus sign.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Poly;
use crate::rational::Rational;
use crate::var::{split_name, VarId};

pub fn parse(text: &str) -> Result<Poly> {
    let mut p = Parser { src: text, pos: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.err("empty input"));
    }
    let out = p.expr()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.err("unexpected character"));
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Syntax {
            offset: self.pos,
            message: msg.to_string(),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.bump();
                Some(false)
            }
            Some('-') | Some('−') => {
                self.bump();
                Some(true)
            }
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        self.skip_ws();
        let neg = self.sign().unwrap_or(false);
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            self.skip_ws();
            match self.sign() {
                Some(neg) => {
                    let t = self.term()?;
                    acc = if neg { acc.sub(&t) } else { acc.add(&t) };
                }
                None => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        match self.peek() {
            Some(c) => c == '(' || c.is_ascii_digit() || split_name(self.rest()).is_some(),
            None => false,
        }
    }

    fn term(&mut self) -> Result<Poly> {
        self.skip_ws();
        let mut acc = self.factor()?;
        loop {
            self.skip_ws();
            if matches!(self.peek(), Some('*') | Some('·')) {
                self.bump();
                self.skip_ws();
                acc = acc.mul(&self.factor()?);
            } else if self.starts_factor() {
                acc = acc.mul(&self.factor()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.bump();
            self.skip_ws();
            let start = self.pos;
            let digits = self.digits();
            if digits.is_empty() {
                return Err(self.err("expected exponent"));
            }
            let e: u32 = digits.parse().map_err(|_| Error::Syntax {
                offset: start,
                message: "exponent too large".into(),
            })?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn atom(&mut self) -> Result<Poly> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('(') => {
                self.bump();
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.err("expected ')'"));
                }
                self.bump();
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits();
                let save = self.pos;
                self.skip_ws();
                let mut text = num.to_string();
                if self.peek() == Some('/') {
                    self.bump();
                    self.skip_ws();
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(self.err("expected denominator"));
                    }
                    text.push('/');
                    text.push_str(den);
                } else {
                    self.pos = save;
                }
                let r: Rational = text.parse().map_err(|_| Error::Syntax {
                    offset: save,
                    message: "invalid rational literal".into(),
                })?;
                Ok(Poly::constant(r))
            }
            Some(_) => {
                let start = self.pos;
                let Some((family, tail)) = split_name(self.rest()) else {
                    let word: String = self
                        .rest()
                        .chars()
                        .take_while(|c| c.is_alphanumeric() || *c == '_')
                        .collect();
                    if word.is_empty() {
                        return Err(self.err("unexpected character"));
                    }
                    return Err(Error::UnknownVariable(word));
                };
                self.pos = self.src.len() - tail.len();
                let digits = self.digits();
                let name = &self.src[start..self.pos];
                if !family.is_public() {
                    return Err(Error::UnknownVariable(name.to_string()));
                }
                let ds: Vec<u8> = digits.bytes().map(|b| b - b'0').collect();
                let v = VarId::new(family, &ds)
                    .map_err(|_| Error::UnknownVariable(name.to_string()))?;
                Ok(Poly::var(v))
            }
        }
    }
}

/// Canonical text: terms in decreasing graded-lex order, unit coefficients
/// omitted, `0` for the zero polynomial.
pub fn render(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if m.is_one() {
            out.push_str(&a.to_string());
        } else {
            if !a.is_one() {
                out.push_str(&a.to_string());
                out.push(' ');
            }
            out.push_str(&m.to_string());
        }
    }
    out
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    coeff: Rational,
    monomial: BTreeMap<String, u16>,
}

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    terms: Vec<JsonTerm>,
}

pub fn to_json_value(p: &Poly) -> serde_json::Value {
    let jp = JsonPoly {
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.clone(),
                monomial: m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
            })
            .collect(),
    };
    serde_json::to_value(jp).expect("polynomial serializes")
}

pub fn to_json(p: &Poly) -> String {
    to_json_value(p).to_string()
}

pub fn from_json(text: &str) -> Result<Poly> {
    let jp: JsonPoly = serde_json::from_str(text).map_err(|e| Error::Syntax {
        offset: e.column().saturating_sub(1),
        message: e.to_string(),
    })?;
    let mut terms = Vec::with_capacity(jp.terms.len());
    for t in jp.terms {
        let mut pairs = Vec::new();
        for (name, e) in t.monomial {
            pairs.push((VarId::parse(&name)?, e));
        }
        terms.push((Monomial::from_pairs(pairs), t.coeff));
    }
    Ok(Poly::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_example_cubic() {
        let f = parse("x1^3 - 6 x1 x2^2 - 6 x2^3 + 6 x1^2 x3 + 18 x1 x2 x3 + 12 x2^2 x3 + 4 x3^3")
            .unwrap();
        assert_eq!(f.term_count(), 7);
        assert_eq!(
            render(&f),
            "x1^3 + 6 x1^2 x3 - 6 x1 x2^2 + 18 x1 x2 x3 - 6 x2^3 + 12 x2^2 x3 + 4 x3^3"
        );
    }

    #[test]
    fn parentheses_juxtaposition_and_fractions() {
        let f = parse("x1 (x1 x2 + x3^2)").unwrap();
        assert_eq!(f, parse("x1^2x2 + x1*x3^2").unwrap());
        let g = parse("3/4 x1 − 1/2").unwrap();
        assert_eq!(render(&g), "3/4 x1 - 1/2");
        assert_eq!(parse("0").unwrap(), Poly::zero());
        assert_eq!(parse("-(x1 - x2)").unwrap(), parse("x2 - x1").unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        match parse("x1 + + x2") {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse("q1"), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse("x4"), Err(Error::UnknownVariable(_))));
        assert!(matches!(parse("x1 ^"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("(x1"), Err(Error::Syntax { .. })));
        assert!(matches!(parse(""), Err(Error::Syntax { .. })));
    }

    #[test]
    fn json_round_trip() {
        let f = parse("3/4 f123 x1^2 - θ3311 u3 + 7").unwrap();
        let j = to_json(&f);
        assert!(j.contains("\"3/4\""));
        assert!(j.contains("\"7/1\""));
        assert_eq!(from_json(&j).unwrap(), f);
    }
}
