//! Parser for polynomials in x0..x3 with cyclotomic literal coefficients.
//!
//! ```text
//! expr   := ["-"] term (("+" | "-") term)*
//! term   := factor ("*" factor)*
//! factor := atom ("^" nat)?
//! atom   := int ("/" int)? | symbol | var | "(" expr ")"
//! ```
//! Symbols: `w` = zeta24, `e3`, `i`, `e8`, `e12`, `s3` = sqrt 3.

use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::Poly;
use crate::error::{Error, Result};
use crate::exactnum::{sqrt3, CycNum, Rational};

const MAX_EXPONENT: u32 = 64;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(text[start..i].parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(text[start..i].to_string())));
        } else if "+-*^()/".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(Error::Parse { pos: i, msg: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly> {
        let neg = self.eat('-');
        let mut acc = self.term()?;
        if neg {
            acc = -&acc;
        }
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.eat('^') {
            let e = match self.peek() {
                Some(Tok::Int(n)) => u32::try_from(n.clone()).ok().filter(|&e| e <= MAX_EXPONENT),
                _ => return self.err("expected exponent"),
            };
            let Some(e) = e else { return self.err(format!("exponent exceeds {MAX_EXPONENT}")) };
            self.pos += 1;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        let start = self.here();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.eat('/') {
                    let d = match self.peek() {
                        Some(Tok::Int(d)) if *d != BigInt::from(0) => d.clone(),
                        Some(Tok::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected denominator"),
                    };
                    self.pos += 1;
                    return Ok(Poly::constant(CycNum::from_rational(&Rational::new(n, d))));
                }
                Ok(Poly::constant(CycNum::from_rational(&Rational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                symbol(&name).ok_or(Error::UnknownSymbol { pos: start, name })
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected `)`");
                }
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn symbol(name: &str) -> Option<Poly> {
    let z = |k| Some(Poly::constant(CycNum::zeta_pow(k)));
    match name {
        "w" => z(1),
        "e3" => z(8),
        "i" => z(6),
        "e8" => z(3),
        "e12" => z(2),
        "s3" => Some(Poly::constant(sqrt3())),
        "x0" => Some(Poly::var(0)),
        "x1" => Some(Poly::var(1)),
        "x2" => Some(Poly::var(2)),
        "x3" => Some(Poly::var(3)),
        _ => None,
    }
}

pub fn parse_poly(text: &str) -> Result<Poly> {
    let toks = lex(text)?;
    let mut p = Parser { toks, pos: 0, end: text.len() };
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(out)
}

/// Parses a cyclotomic literal (a polynomial expression without variables).
pub fn parse_cyc(text: &str) -> Result<CycNum> {
    parse_poly(text)?
        .as_constant()
        .ok_or_else(|| Error::Parse { pos: 0, msg: format!("`{text}` is not a constant") })
}

impl FromStr for CycNum {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_cyc(s)
    }
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fermat_has_four_terms() {
        let f = parse_poly("x0^3+x1^3+x2^3+x3^3").unwrap();
        assert_eq!(f.num_terms(), 4);
        assert!(parse_poly("0").unwrap().is_zero());
    }

    #[test]
    fn coefficient_with_sqrt3() {
        let f = parse_poly("3*(s3-1)*x0*x1*x2").unwrap();
        assert_eq!(f.num_terms(), 1);
        let want = &(&sqrt3() * &CycNum::from_int(3)) - &CycNum::from_int(3);
        assert_eq!(f.coeff(&[1, 1, 1, 0]), want);
    }

    #[test]
    fn literals() {
        assert_eq!(parse_cyc("e3^3").unwrap(), CycNum::one());
        assert_eq!(parse_cyc("i*i").unwrap(), CycNum::from_int(-1));
        assert_eq!(parse_cyc("-3/6").unwrap(), CycNum::from_rational(&Rational::new((-1).into(), 2.into())));
        assert_eq!(parse_cyc("s3^2").unwrap(), CycNum::from_int(3));
        assert_eq!(parse_cyc("e8^2").unwrap(), parse_cyc("i").unwrap());
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(parse_poly("x0 x1"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_poly("x0 + y"), Err(Error::UnknownSymbol { pos: 5, .. })));
        assert!(matches!(parse_poly("2x0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("(x0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("1/0"), Err(Error::Parse { .. })));
        assert!(matches!(parse_poly("x0 $"), Err(Error::Parse { pos: 3, .. })));
    }
}
