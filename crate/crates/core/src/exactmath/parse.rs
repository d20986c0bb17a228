//! Recursive-descent parser for polynomial text.
//!
//! ```text
//! poly   := sign? term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' int)?
//! atom   := int ('/' int)? | symbol | '(' poly ')'
//! ```

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Polynomial, Rational, SymbolTable};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push(Token::Plus),
            '-' => out.push(Token::Minus),
            '*' => out.push(Token::Star),
            '/' => out.push(Token::Slash),
            '^' => out.push(Token::Caret),
            '(' => out.push(Token::LParen),
            ')' => out.push(Token::RParen),
            c if c.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Int(digits.parse().expect("digits")));
                continue;
            }
            c if c.is_alphabetic() => {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push(Token::Ident(chars[start..i].iter().collect()));
                continue;
            }
            other => return Err(Error::parse(format!("unexpected character {other:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    symbols: &'a Arc<SymbolTable>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect_int(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Token::Int(n)) => Ok(n),
            other => Err(Error::parse(format!("expected integer, found {other:?}"))),
        }
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.symbols);
        let mut negate = match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                true
            }
            Some(Token::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let t = self.term()?;
            acc = if negate { &acc - &t } else { &acc + &t };
            negate = match self.peek() {
                Some(Token::Plus) => false,
                Some(Token::Minus) => true,
                _ => break,
            };
            self.pos += 1;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Token::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if let Some(Token::Caret) = self.peek() {
            self.pos += 1;
            let e = self.expect_int()?;
            let e: u32 = e.try_into().map_err(|_| Error::parse("exponent out of range"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.next() {
            Some(Token::Int(n)) => {
                let mut q = Rational::from_integer(n);
                if let Some(Token::Slash) = self.peek() {
                    self.pos += 1;
                    let d = self.expect_int()?;
                    q = Rational::new(q.numer().clone(), d)?;
                }
                Ok(Polynomial::constant(self.symbols, q))
            }
            Some(Token::Ident(name)) => Polynomial::var(self.symbols, &name)
                .map_err(|_| Error::parse(format!("unknown symbol {name:?}"))),
            Some(Token::LParen) => {
                let inner = self.poly()?;
                match self.next() {
                    Some(Token::RParen) => Ok(inner),
                    other => Err(Error::parse(format!("expected ')', found {other:?}"))),
                }
            }
            other => Err(Error::parse(format!("unexpected token {other:?}"))),
        }
    }
}

pub(crate) fn parse_polynomial(text: &str, symbols: &Arc<SymbolTable>) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(Error::parse("empty polynomial"));
    }
    let mut parser = Parser { tokens, pos: 0, symbols };
    let p = parser.poly()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::parse(format!("trailing input in {text:?}")));
    }
    Ok(p)
}
