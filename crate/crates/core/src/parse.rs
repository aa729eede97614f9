//! Parser for the human-readable polynomial syntax used by job files:
//! integer/rational coefficients, `+ - * ^`, parentheses, and variable
//! names. In quadratic-extension fields the name `i` denotes the adjoined
//! square root.

use crate::coeff::FieldSpec;
use crate::error::{Error, Result};
use crate::poly::{Poly, Ring};
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(i64, i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn lex(input: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let c = chars[pos];
        match c {
            ' ' | '\t' | '\n' | '\r' => pos += 1,
            '+' => {
                out.push(Token::Plus);
                pos += 1;
            }
            '-' => {
                out.push(Token::Minus);
                pos += 1;
            }
            '*' => {
                out.push(Token::Star);
                pos += 1;
            }
            '^' => {
                out.push(Token::Caret);
                pos += 1;
            }
            '(' => {
                out.push(Token::LParen);
                pos += 1;
            }
            ')' => {
                out.push(Token::RParen);
                pos += 1;
            }
            '0'..='9' => {
                let start = pos;
                while pos < chars.len() && chars[pos].is_ascii_digit() {
                    pos += 1;
                }
                let num: i64 = chars[start..pos]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("integer out of range at {start}")))?;
                // a '/' directly after an integer makes a rational literal
                if pos < chars.len() && chars[pos] == '/' {
                    pos += 1;
                    let dstart = pos;
                    while pos < chars.len() && chars[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if dstart == pos {
                        return Err(Error::Parse("expected denominator after '/'".into()));
                    }
                    let den: i64 = chars[dstart..pos]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| Error::Parse(format!("integer out of range at {dstart}")))?;
                    if den == 0 {
                        return Err(Error::Parse("zero denominator".into()));
                    }
                    out.push(Token::Num(num, den));
                } else {
                    out.push(Token::Num(num, 1));
                }
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = pos;
                while pos < chars.len() && (chars[pos].is_ascii_alphanumeric() || chars[pos] == '_')
                {
                    pos += 1;
                }
                out.push(Token::Ident(chars[start..pos].iter().collect()));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    ring: &'a Arc<Ring>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            Some(Token::Plus) => {
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while matches!(self.peek(), Some(Token::Star)) {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if matches!(self.peek(), Some(Token::Caret)) {
            self.pos += 1;
            match self.next() {
                Some(Token::Num(n, 1)) if n >= 0 => Ok(base.pow(n as u32)),
                other => Err(Error::Parse(format!(
                    "expected a nonnegative integer exponent, got {other:?}"
                ))),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.next() {
            Some(Token::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Token::RParen) => Ok(e),
                    _ => Err(Error::Parse("expected ')'".into())),
                }
            }
            Some(Token::Num(n, d)) => {
                let field = &self.ring.field;
                let c = field.from_ratio(n, d)?;
                Ok(Poly::constant(self.ring, c))
            }
            Some(Token::Ident(name)) => {
                if let Some(idx) = self.ring.var_index(&name) {
                    return Ok(Poly::var(self.ring, idx));
                }
                if name == "i" {
                    if matches!(self.ring.field.spec(), FieldSpec::QuadraticExt { .. }) {
                        return Ok(Poly::constant(self.ring, self.ring.field.gen_i()?));
                    }
                    return Err(Error::Parse(
                        "'i' is only available over a quadratic extension field".into(),
                    ));
                }
                Err(Error::Parse(format!("unknown variable '{name}'")))
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a polynomial expression in the given ring.
pub fn parse_poly(input: &str, ring: &Arc<Ring>) -> Result<Poly> {
    let tokens = lex(input)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
    };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}
