//! Text input: ternary forms, field-element literals and field
//! specifications.
//!
//! The expression grammar is shared by every coefficient field: sums of
//! terms, `*` for products, `^` for natural-number powers, `/` for
//! division by constants, parentheses for grouping. `-` is accepted and
//! means `+` (characteristic two). Which identifiers are legal depends on
//! the declared field: `X Y Z` always, `g` in GF(2^k) for k >= 2 (the
//! residue class of x), `T` over rational function fields. Numeric
//! literals reduce mod 2.

use crate::field::Field;
use crate::form::TernaryForm;
use crate::funcfield::{RatFunc, RatFuncField};
use crate::gf::{GaloisField, GfElem};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
#[error("parse error at byte {pos}: {message}")]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            b'/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            b'^' => {
                out.push((i, Tok::Caret));
                i += 1;
            }
            b'(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: u64 = text[start..i]
                    .parse()
                    .map_err(|_| ParseError { pos: start, message: "number too large".into() })?;
                out.push((start, Tok::Num(n)));
            }
            _ if b.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => return err(i, format!("unexpected character {:?}", b as char)),
        }
    }
    Ok(out)
}

struct Parser<'a, K: Field> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    field: &'a K,
    symbols: HashMap<String, TernaryForm<K>>,
    end: usize,
}

impl<'a, K: Field> Parser<'a, K> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<TernaryForm<K>, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) | Some(Tok::Minus) => {
                    self.bump();
                    let rhs = self.term()?;
                    acc = acc.add(&rhs, self.field);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<TernaryForm<K>, ParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.mul(&rhs, self.field);
                }
                Some(Tok::Slash) => {
                    let pos = self.pos();
                    self.bump();
                    let rhs = self.factor()?;
                    if rhs.degree() != 0 || rhs.is_zero() {
                        return err(pos, "division requires a nonzero constant divisor");
                    }
                    let c = rhs.coeff(&crate::form::Mono::new(0, 0, 0), self.field);
                    acc = acc.scale(&self.field.inv(&c), self.field);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<TernaryForm<K>, ParseError> {
        let base = self.primary()?;
        if let Some(Tok::Caret) = self.peek() {
            let pos = self.pos();
            self.bump();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    if n > 64 {
                        return err(pos, "exponent too large");
                    }
                    return Ok(base.pow(n as usize, self.field));
                }
                _ => return err(pos, "exponent must be a natural number"),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<TernaryForm<K>, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => {
                // characteristic two: integers collapse mod 2
                if n % 2 == 0 {
                    Ok(TernaryForm::zero())
                } else {
                    Ok(TernaryForm::monomial(
                        crate::form::Mono::new(0, 0, 0),
                        self.field.one(),
                        self.field,
                    ))
                }
            }
            Some(Tok::Ident(name)) => match self.symbols.get(&name) {
                Some(form) => Ok(form.clone()),
                None => err(pos, format!("unknown symbol '{}' in this field", name)),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => err(pos, "unbalanced parenthesis"),
                }
            }
            Some(Tok::Plus) | Some(Tok::Minus) => self.factor(),
            Some(t) => err(pos, format!("unexpected token {:?}", t)),
            None => err(pos, "unexpected end of input"),
        }
    }

    fn finish(mut self) -> Result<TernaryForm<K>, ParseError> {
        let form = self.expr()?;
        if self.at < self.toks.len() {
            return err(self.pos(), "trailing input");
        }
        Ok(form)
    }
}

fn variable_symbols<K: Field>(k: &K) -> HashMap<String, TernaryForm<K>> {
    let mut map = HashMap::new();
    map.insert("X".into(), TernaryForm::monomial(crate::form::Mono::new(1, 0, 0), k.one(), k));
    map.insert("Y".into(), TernaryForm::monomial(crate::form::Mono::new(0, 1, 0), k.one(), k));
    map.insert("Z".into(), TernaryForm::monomial(crate::form::Mono::new(0, 0, 1), k.one(), k));
    map
}

fn reject_inhomogeneous<K: Field>(
    form: &TernaryForm<K>,
    k: &K,
) -> Result<(), ParseError> {
    if form.is_homogeneous() {
        return Ok(());
    }
    let lead_deg = form.degree();
    let offender = form
        .terms()
        .find(|(m, _)| (m.deg() as usize) != lead_deg)
        .map(|(m, c)| TernaryForm::monomial(*m, c.clone(), k).display_in(k))
        .unwrap_or_default();
    err(0, format!("form is not homogeneous: monomial {} breaks degree {}", offender, lead_deg))
}

/// Parse a homogeneous form over GF(2^k); `g` is the residue class of x
/// (k >= 2 only).
pub fn parse_form_gf(
    text: &str,
    k: &GaloisField,
) -> Result<TernaryForm<GaloisField>, ParseError> {
    let mut symbols = variable_symbols(k);
    if let Some(g) = k.generator() {
        symbols.insert("g".into(), TernaryForm::monomial(crate::form::Mono::new(0, 0, 0), g, k));
    }
    let parser =
        Parser { toks: lex(text)?, at: 0, field: k, symbols, end: text.len() };
    let form = parser.finish()?;
    reject_inhomogeneous(&form, k)?;
    Ok(form)
}

/// Parse a homogeneous form over F_q(T).
pub fn parse_form_ratfunc(
    text: &str,
    k: &RatFuncField,
) -> Result<TernaryForm<RatFuncField>, ParseError> {
    let mut symbols = variable_symbols(k);
    symbols.insert(
        "T".into(),
        TernaryForm::monomial(crate::form::Mono::new(0, 0, 0), k.t(), k),
    );
    if let Some(g) = k.base().generator() {
        symbols.insert(
            "g".into(),
            TernaryForm::monomial(crate::form::Mono::new(0, 0, 0), k.constant(g), k),
        );
    }
    let parser = Parser { toks: lex(text)?, at: 0, field: k, symbols, end: text.len() };
    let form = parser.finish()?;
    reject_inhomogeneous(&form, k)?;
    Ok(form)
}

fn constant_of<K: Field>(form: &TernaryForm<K>, k: &K, what: &str) -> Result<K::Elem, ParseError> {
    if form.is_zero() {
        return Ok(k.zero());
    }
    if form.degree() != 0 {
        return err(0, format!("{} must not involve X, Y, Z", what));
    }
    Ok(form.coeff(&crate::form::Mono::new(0, 0, 0), k))
}

/// Parse a field element literal of GF(2^k), e.g. `g^2+1`.
pub fn parse_gf_elem(text: &str, k: &GaloisField) -> Result<GfElem, ParseError> {
    let mut symbols: HashMap<String, TernaryForm<GaloisField>> = HashMap::new();
    if let Some(g) = k.generator() {
        symbols.insert("g".into(), TernaryForm::monomial(crate::form::Mono::new(0, 0, 0), g, k));
    }
    let parser = Parser { toks: lex(text)?, at: 0, field: k, symbols, end: text.len() };
    constant_of(&parser.finish()?, k, "a field element")
}

/// Parse a rational function literal, e.g. `(T^2+1)/(T^3+T+1)`.
pub fn parse_ratfunc(text: &str, k: &RatFuncField) -> Result<RatFunc, ParseError> {
    let mut symbols: HashMap<String, TernaryForm<RatFuncField>> = HashMap::new();
    symbols.insert(
        "T".into(),
        TernaryForm::monomial(crate::form::Mono::new(0, 0, 0), k.t(), k),
    );
    if let Some(g) = k.base().generator() {
        symbols.insert(
            "g".into(),
            TernaryForm::monomial(crate::form::Mono::new(0, 0, 0), k.constant(g), k),
        );
    }
    let parser = Parser { toks: lex(text)?, at: 0, field: k, symbols, end: text.len() };
    constant_of(&parser.finish()?, k, "a rational function")
}

/// A declared coefficient field: `gf2`, `gf4`, `gf8`, `gf16`, `gf(2^k)`,
/// or `ratfunc(<inner>)` for F_q(T).
#[derive(Clone, Copy, Debug)]
pub enum FieldSpec {
    Galois(GaloisField),
    RatFunc(RatFuncField),
}

pub fn parse_field_spec(text: &str) -> Result<FieldSpec, ParseError> {
    let spec = text.trim().to_ascii_lowercase();
    let galois = |k: usize| -> Result<FieldSpec, ParseError> {
        GaloisField::new(k)
            .map(FieldSpec::Galois)
            .map_err(|e| ParseError { pos: 0, message: e.to_string() })
    };
    match spec.as_str() {
        "gf2" => return galois(1),
        "gf4" => return galois(2),
        "gf8" => return galois(3),
        "gf16" => return galois(4),
        _ => {}
    }
    if let Some(rest) = spec.strip_prefix("ratfunc(").and_then(|s| s.strip_suffix(')')) {
        return match parse_field_spec(rest)? {
            FieldSpec::Galois(base) => Ok(FieldSpec::RatFunc(RatFuncField::new(base))),
            FieldSpec::RatFunc(_) => {
                err(0, "nested rational function fields are not supported")
            }
        };
    }
    if let Some(rest) = spec.strip_prefix("gf(2^").and_then(|s| s.strip_suffix(')')) {
        let k: usize = rest
            .parse()
            .map_err(|_| ParseError { pos: 0, message: format!("bad extension degree {:?}", rest) })?;
        return galois(k);
    }
    err(0, format!("unrecognized field spec {:?} (try gf2, gf4, gf8, gf(2^k), ratfunc(gf2))", spec))
}
