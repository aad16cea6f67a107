//! Recursive-descent parser for algebra expressions:
//!
//! ```text
//! expr      := ['-'] term (('+'|'-') term)*
//! term      := factor ('*' factor)*
//! factor    := scalar | generator | '(' expr ')'
//! scalar    := INT ['/' INT]
//! generator := VERTEX | EDGE '[' i ',' j ']' | EDGE '*[' i ',' j ']'
//! ```
//!
//! A scalar standing alone in a sum means that multiple of the identity.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Element, LeavittAlgebra};
use crate::error::{Error, Result};
use crate::letters::Letter;
use crate::lexer::{syntax, tokenize, Tok, Token};
use crate::scalar::Scalar;

enum Value {
    Scalar(Scalar),
    Element(Element),
}

struct Parser<'a> {
    alg: &'a Arc<LeavittAlgebra>,
    tokens: Vec<Token>,
    pos: usize,
    len: usize,
}

pub(super) fn parse_expression(alg: &Arc<LeavittAlgebra>, text: &str) -> Result<Element> {
    let flat: String = text
        .chars()
        .map(|c| if c == '\n' || c == '\r' { ' ' } else { c })
        .collect();
    let tokens = tokenize(&flat, 1)?;
    let mut p = Parser {
        alg,
        tokens,
        pos: 0,
        len: flat.chars().count(),
    };
    if p.tokens.is_empty() {
        return Err(p.error("empty expression"));
    }
    let v = p.expr()?;
    if p.pos < p.tokens.len() {
        return Err(p.error("unexpected token"));
    }
    p.to_element(v)
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn error(&self, message: &str) -> Error {
        let column = self.tokens.get(self.pos).map(|t| t.column).unwrap_or(self.len + 1);
        syntax(1, column, message)
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected {what}")))
        }
    }

    fn to_element(&self, v: Value) -> Result<Element> {
        match v {
            Value::Element(e) => Ok(e),
            Value::Scalar(c) => self.alg.one().scale(&c),
        }
    }

    fn expr(&mut self) -> Result<Value> {
        let negate = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = self.negate(acc)?;
        }
        loop {
            let sign = match self.peek() {
                Some(Tok::Plus) => 1,
                Some(Tok::Minus) => -1,
                _ => return Ok(acc),
            };
            self.pos += 1;
            let rhs = self.term()?;
            acc = self.add(acc, rhs, sign)?;
        }
    }

    fn negate(&self, v: Value) -> Result<Value> {
        Ok(match v {
            Value::Scalar(c) => Value::Scalar(c.neg()),
            Value::Element(e) => Value::Element(e.scale(&self.alg.field().from_i64(-1))?),
        })
    }

    fn add(&self, a: Value, b: Value, sign: i64) -> Result<Value> {
        let s = self.alg.field().from_i64(sign);
        if let (Value::Scalar(x), Value::Scalar(y)) = (&a, &b) {
            return Ok(Value::Scalar(x.add(&y.mul(&s))));
        }
        let a = self.to_element(a)?;
        let b = self.to_element(b)?;
        Ok(Value::Element(Element::combine(&self.alg.field().one(), &a, &s, &b)?))
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            let rhs = self.factor()?;
            acc = match (acc, rhs) {
                (Value::Scalar(x), Value::Scalar(y)) => Value::Scalar(x.mul(&y)),
                (Value::Scalar(c), Value::Element(e)) | (Value::Element(e), Value::Scalar(c)) => {
                    Value::Element(e.scale(&c)?)
                }
                (Value::Element(x), Value::Element(y)) => Value::Element(x.multiply(&y)?),
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Value> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let num: BigInt = n.parse().expect("lexer yields digits");
                let den: BigInt = if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) => {
                            self.pos += 1;
                            d.parse().expect("lexer yields digits")
                        }
                        _ => return Err(self.error("expected denominator")),
                    }
                } else {
                    BigInt::from(1)
                };
                Ok(Value::Scalar(self.alg.field().from_ratio(&num, &den)?))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                self.generator(&name).map(Value::Element)
            }
            _ => Err(self.error("expected scalar, generator or `(`")),
        }
    }

    fn generator(&mut self, name: &str) -> Result<Element> {
        let h = self.alg.graph();
        let star = match self.peek() {
            Some(Tok::LBracket) => false,
            Some(Tok::StarBracket) => true,
            _ => {
                return match h.vertex_id(name) {
                    Some(_) => self.alg.vertex(name),
                    None => Err(Error::UnknownGenerator(name.to_string())),
                };
            }
        };
        self.pos += 1;
        let i = self.index()?;
        self.expect(Tok::Comma, "`,`")?;
        let j = self.index()?;
        self.expect(Tok::RBracket, "`]`")?;
        let e = h
            .edge_id(name)
            .ok_or_else(|| Error::UnknownGenerator(format!("{name}[{i},{j}]")))?;
        let edge = h.edge(e);
        if i == 0 || j == 0 || i > edge.source.len() || j > edge.range.len() {
            return Err(Error::IndexOutOfRange {
                edge: name.to_string(),
                i,
                j,
                source_len: edge.source.len(),
                range_len: edge.range.len(),
            });
        }
        let letter = if star {
            Letter::star(e, i, j)
        } else {
            Letter::direct(e, i, j)
        };
        Ok(self.alg.letter(letter))
    }

    fn index(&mut self) -> Result<usize> {
        match self.peek().cloned() {
            Some(Tok::Int(s)) => {
                let v = s.parse().map_err(|_| self.error("index too large"))?;
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.error("expected index")),
        }
    }
}
