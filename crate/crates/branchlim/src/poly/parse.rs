//! Parser for the canonical polynomial text form: `^` for powers, explicit
//! `*`, integer or `p/q` coefficients, `+ - ( )`. Every report emitter
//! produces text this parser accepts, round-trip exact.

use super::{Poly, RingRef};
use crate::arith::{Int, Rat};
use num::{One, Zero};
use std::fmt;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.position, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Int),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn next_tok(&mut self) -> Result<Option<(usize, Tok)>, ParseError> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(None);
        }
        let start = self.pos;
        let c = self.src[self.pos];
        let tok = match c {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'(' => {
                self.pos += 1;
                Tok::LParen
            }
            b')' => {
                self.pos += 1;
                Tok::RParen
            }
            b'0'..=b'9' => {
                let mut end = self.pos;
                while end < self.src.len() && self.src[end].is_ascii_digit() {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Num(text.parse().unwrap())
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let mut end = self.pos;
                while end < self.src.len()
                    && (self.src[end].is_ascii_alphanumeric() || self.src[end] == b'_')
                {
                    end += 1;
                }
                let text = std::str::from_utf8(&self.src[self.pos..end]).unwrap();
                self.pos = end;
                Tok::Name(text.to_string())
            }
            other => {
                return Err(ParseError {
                    position: start,
                    message: format!("unexpected character {:?}", other as char),
                })
            }
        };
        Ok(Some((start, tok)))
    }
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<(usize, Tok)>,
    idx: usize,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.idx).map(|(_, t)| t.clone());
        if t.is_some() {
            self.idx += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            position: self.pos(),
            message: message.into(),
        })
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = acc.add(&self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    // term := ('-'|'+')* factor ('*' factor)*   with implicit '*' forbidden
    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut sign = Rat::one();
        loop {
            match self.peek() {
                Some(Tok::Minus) => {
                    self.bump();
                    sign = -sign;
                }
                Some(Tok::Plus) => {
                    self.bump();
                }
                _ => break,
            }
        }
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = acc.mul(&self.factor()?);
                }
                Some(Tok::Slash) => {
                    // rational coefficient: previous factor must be constant,
                    // divisor must be a nonzero integer literal
                    self.bump();
                    match self.bump() {
                        Some(Tok::Num(n)) => {
                            if n.is_zero() {
                                return self.err("division by zero");
                            }
                            acc = acc.scale(&Rat::new(Int::one(), n));
                        }
                        _ => return self.err("expected integer after '/'"),
                    }
                }
                _ => break,
            }
        }
        Ok(acc.scale(&sign))
    }

    // factor := atom ('^' nat)?
    fn factor(&mut self) -> Result<Poly, ParseError> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| ParseError {
                            position: self.pos(),
                            message: "exponent too large".into(),
                        })?;
                    return Ok(base.pow(e));
                }
                _ => return self.err("expected integer exponent after '^'"),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly, ParseError> {
        let position = self.pos();
        match self.bump() {
            Some(Tok::Num(n)) => Ok(Poly::constant(self.ring, Rat::from_integer(n))),
            Some(Tok::Name(name)) => match self.ring.var_index(&name) {
                Some(i) => Ok(Poly::var(self.ring, i)),
                None => Err(ParseError {
                    position,
                    message: format!("unknown variable {name}"),
                }),
            },
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => self.err("expected ')'"),
                }
            }
            Some(other) => Err(ParseError {
                position,
                message: format!("unexpected token {:?}", other),
            }),
            None => Err(ParseError {
                position,
                message: "unexpected end of input (dangling operator?)".into(),
            }),
        }
    }
}

/// Parse an expression in the given ring's variables.
pub fn parse_poly(ring: &RingRef, src: &str) -> Result<Poly, ParseError> {
    let mut lexer = Lexer::new(src);
    let mut toks = Vec::new();
    while let Some(t) = lexer.next_tok()? {
        toks.push(t);
    }
    let end = src.len();
    let mut parser = Parser {
        ring,
        toks,
        idx: 0,
        end,
    };
    let p = parser.expr()?;
    if parser.idx != parser.toks.len() {
        return parser.err("trailing input");
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    #[test]
    fn parses_products_and_powers() {
        let r = PolyRing::simple(&["x", "y"]);
        let p = parse_poly(&r, "(x + y)^2 - 2*x*y").unwrap();
        assert_eq!(p.to_string(), "x^2 + y^2");
    }

    #[test]
    fn parses_rational_coefficients() {
        let r = PolyRing::simple(&["x"]);
        let p = parse_poly(&r, "1/2*x - 3/4").unwrap();
        assert_eq!(p.to_string(), "1/2*x - 3/4");
    }

    #[test]
    fn rejects_dangling_operator() {
        let r = PolyRing::simple(&["x1"]);
        let e = parse_poly(&r, "x1^2 -").unwrap_err();
        assert!(e.message.contains("unexpected end"));
    }

    #[test]
    fn rejects_unknown_variable() {
        let r = PolyRing::simple(&["x"]);
        let e = parse_poly(&r, "x + q").unwrap_err();
        assert!(e.message.contains("unknown variable q"));
    }
}
