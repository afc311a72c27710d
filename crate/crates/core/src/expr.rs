//! Parser for polynomial expressions.
//!
//! Grammar (whitespace-insensitive, juxtaposition disallowed):
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := '-'* primary ('^' nat)?
//! primary := identifier | rational | '(' expr ')'
//! ```
//! Identifiers name algebra variables or extra scalar symbols (e.g. the
//! coefficient variable `t` of ℚ[t]); rationals are `a` or `a/b`.
//! Multiplication is the algebra's ⋆ product, left-associative, in the
//! order written.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::orders::OrderSpec;
use crate::poly::Poly;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Nat(BigInt),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '^' => {
                out.push((Tok::Caret, col));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, col));
                i += 1;
            }
            '(' => {
                out.push((Tok::LParen, col));
                i += 1;
            }
            ')' => {
                out.push((Tok::RParen, col));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                out.push((Tok::Nat(s.parse().unwrap()), col));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_')
                {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => {
                return Err(Error::InvalidInput(format!(
                    "unexpected character '{other}' at column {col}"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser<'a, C: Scalar> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a [String],
    algebra: &'a Algebra<C>,
    order: &'a OrderSpec,
    scalar_vars: &'a HashMap<String, C>,
}

impl<'a, C: Scalar> Parser<'a, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, c)| *c)
            .unwrap_or_else(|| self.toks.last().map(|(_, c)| c + 1).unwrap_or(1))
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, msg: &str) -> Error {
        Error::InvalidInput(format!("{msg} at column {}", self.col()))
    }

    fn expr(&mut self) -> Result<Poly<C>> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.add(&t, self.order);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = acc.sub(&t, self.order);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly<C>> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Tok::Star)) {
            self.bump();
            let f = self.factor()?;
            acc = self.algebra.multiply(&acc, &f, self.order)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<C>> {
        let mut neg = false;
        while matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            neg = !neg;
        }
        let mut base = self.primary()?;
        if matches!(self.peek(), Some(Tok::Caret)) {
            self.bump();
            let e = match self.bump() {
                Some(Tok::Nat(n)) => n,
                _ => return Err(self.err("expected a natural number exponent")),
            };
            let e: u32 = e
                .try_into()
                .map_err(|_| Error::InvalidInput("exponent too large".into()))?;
            let mut acc = Poly::one(self.algebra.n);
            for _ in 0..e {
                acc = self.algebra.multiply(&acc, &base, self.order)?;
            }
            base = acc;
        }
        Ok(if neg { base.neg() } else { base })
    }

    fn primary(&mut self) -> Result<Poly<C>> {
        match self.bump() {
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.vars.iter().position(|v| *v == name) {
                    Ok(Poly::var(self.algebra.n, i))
                } else if let Some(c) = self.scalar_vars.get(&name) {
                    Ok(Poly::constant(self.algebra.n, c.clone()))
                } else {
                    Err(Error::InvalidInput(format!("unknown identifier '{name}'")))
                }
            }
            Some(Tok::Nat(num)) => {
                // Optional '/ nat' forms a rational literal.
                let mut r = BigRational::from_integer(num);
                if matches!(self.peek(), Some(Tok::Slash)) {
                    self.bump();
                    match self.bump() {
                        Some(Tok::Nat(den)) if !den.is_zero() => {
                            r /= BigRational::from_integer(den);
                        }
                        _ => return Err(self.err("expected a nonzero denominator")),
                    }
                }
                let c = C::from_rational(&r).ok_or_else(|| {
                    Error::InvalidInput(format!(
                        "literal {r} is not representable in the coefficient domain"
                    ))
                })?;
                Ok(Poly::constant(self.algebra.n, c))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(self.err("expected ')'")),
                }
            }
            _ => Err(self.err("expected identifier, number, or '('")),
        }
    }
}

/// Parse one polynomial expression over the algebra.
pub fn parse_poly<C: Scalar>(
    input: &str,
    algebra: &Algebra<C>,
    order: &OrderSpec,
    scalar_vars: &HashMap<String, C>,
) -> Result<Poly<C>> {
    let toks = lex(input)?;
    if toks.is_empty() {
        return Err(Error::InvalidInput("empty expression".into()));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        vars: &algebra.vars,
        algebra,
        order,
        scalar_vars,
    };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}
