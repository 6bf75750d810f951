//! Parser for polynomial literals like `x1^2 - u^2` or `1/2*a*b + 3`.
//!
//! Grammar: signed terms joined by `+`/`-`; a term is a product of factors
//! (rational numbers, or variables with optional `^exponent`), with `*`
//! optional between factors.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{GradedPolynomial, VarSet};
use super::PolyError;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    Num(BigRational),
    Ident(String),
}

fn err(pos: usize, msg: impl Into<String>) -> PolyError {
    PolyError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let bytes = src.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => i += 1,
            b'+' => {
                toks.push((i, Tok::Plus));
                i += 1;
            }
            b'-' => {
                toks.push((i, Tok::Minus));
                i += 1;
            }
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b'^' => {
                toks.push((i, Tok::Caret));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numerator: BigInt = src[start..i].parse().expect("digits");
                let value = if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return Err(err(slash, "expected digits after `/`"));
                    }
                    let denominator: BigInt = src[dstart..i].parse().expect("digits");
                    if denominator.is_zero() {
                        return Err(err(dstart, "zero denominator"));
                    }
                    BigRational::new(numerator, denominator)
                } else {
                    BigRational::from_integer(numerator)
                };
                toks.push((start, Tok::Num(value)));
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(src[start..i].to_owned())));
            }
            other => {
                return Err(err(i, format!("unexpected character `{}`", other as char)));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    vars: &'a Arc<VarSet>,
    toks: Vec<(usize, Tok)>,
    i: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|(_, t)| t.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    /// One factor: a number, or a variable with optional `^exponent`.
    /// Returns `None` when the next token cannot start a factor.
    fn factor(&mut self) -> Result<Option<GradedPolynomial>, PolyError> {
        match self.peek().cloned() {
            Some(Tok::Num(q)) => {
                self.bump();
                Ok(Some(GradedPolynomial::constant(self.vars, q)))
            }
            Some(Tok::Ident(name)) => {
                let at = self.pos();
                self.bump();
                let index = self
                    .vars
                    .index_of(&name)
                    .ok_or_else(|| err(at, format!("unknown variable `{name}`")))?;
                let mut exponent = 1u32;
                if self.peek() == Some(&Tok::Caret) {
                    self.bump();
                    let at = self.pos();
                    match self.bump() {
                        Some(Tok::Num(q)) if q.is_integer() && q >= BigRational::zero() => {
                            exponent = u32::try_from(q.to_integer())
                                .map_err(|_| err(at, "exponent too large"))?;
                        }
                        _ => return Err(err(at, "expected a nonnegative integer exponent")),
                    }
                }
                Ok(Some(
                    GradedPolynomial::variable(self.vars, index).pow(exponent),
                ))
            }
            _ => Ok(None),
        }
    }

    /// A product of factors, with `*` optional between them.
    fn term(&mut self) -> Result<GradedPolynomial, PolyError> {
        let first = self
            .factor()?
            .ok_or_else(|| err(self.pos(), "expected a term"))?;
        let mut product = first;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.bump();
                let at = self.pos();
                let f = self
                    .factor()?
                    .ok_or_else(|| err(at, "expected a factor after `*`"))?;
                product = &product * &f;
            } else if let Some(f) = self.factor()? {
                product = &product * &f;
            } else {
                return Ok(product);
            }
        }
    }
}

pub fn parse_polynomial(vars: &Arc<VarSet>, src: &str) -> Result<GradedPolynomial, PolyError> {
    let toks = lex(src)?;
    let mut p = Parser {
        vars,
        toks,
        i: 0,
        end: src.len(),
    };
    let mut acc = GradedPolynomial::zero(vars);
    let mut sign = BigRational::one();
    // optional leading sign
    match p.peek() {
        Some(Tok::Minus) => {
            sign = -sign;
            p.bump();
        }
        Some(Tok::Plus) => {
            p.bump();
        }
        _ => {}
    }
    loop {
        let term = p.term()?;
        acc = &acc + &term.scale(&sign);
        match p.bump() {
            None => return Ok(acc),
            Some(Tok::Plus) => sign = BigRational::one(),
            Some(Tok::Minus) => sign = -BigRational::one(),
            Some(_) => return Err(err(p.toks[p.i - 1].0, "expected `+` or `-`")),
        }
    }
}
