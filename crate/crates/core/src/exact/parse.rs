//! Parser for the polynomial text grammar: variables `x`, `y`; integer and
//! `p/q` literals; binary `+ - *`; `^` with a nonnegative integer exponent;
//! unary minus; parentheses. Juxtaposition is rejected.

use super::bpoly::BPoly;
use super::rat::Rat;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::Zero;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    X,
    Y,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let b = s.as_bytes();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        let col = i + 1;
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                let st = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = s[st..i].parse().expect("digits");
                out.push((col, Tok::Num(n)));
                continue;
            }
            'x' => out.push((col, Tok::X)),
            'y' => out.push((col, Tok::Y)),
            '+' => out.push((col, Tok::Plus)),
            '-' => out.push((col, Tok::Minus)),
            '*' => out.push((col, Tok::Star)),
            '/' => out.push((col, Tok::Slash)),
            '^' => out.push((col, Tok::Caret)),
            '(' => out.push((col, Tok::LParen)),
            ')' => out.push((col, Tok::RParen)),
            _ => {
                return Err(Error::Parse { col, msg: format!("unexpected character '{c}'") });
            }
        }
        i += 1;
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
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(Error::Parse { col: self.col(), msg: msg.to_string() })
    }

    fn expr(&mut self) -> Result<BPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<BPoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.unary()?;
        }
        match self.peek() {
            Some(Tok::Num(_)) | Some(Tok::X) | Some(Tok::Y) | Some(Tok::LParen) => {
                self.err("implicit multiplication is not allowed; use '*'")
            }
            _ => Ok(acc),
        }
    }

    fn unary(&mut self) -> Result<BPoly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                Ok(-&self.unary()?)
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<BPoly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            let e = match self.peek() {
                Some(Tok::Num(n)) => n.clone(),
                _ => return self.err("exponent must be a nonnegative integer literal"),
            };
            self.pos += 1;
            let e: u32 = match u32::try_from(e) {
                Ok(v) if v <= 64 => v,
                _ => return self.err("exponent too large"),
            };
            if let Some(Tok::Caret) = self.peek() {
                return self.err("chained exponents are ambiguous; use parentheses");
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<BPoly> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    let d = match self.peek() {
                        Some(Tok::Num(d)) => d.clone(),
                        _ => return self.err("expected denominator after '/'"),
                    };
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    self.pos += 1;
                    return Ok(BPoly::constant(Rat::new(n, d)));
                }
                Ok(BPoly::constant(Rat::from_integer(n)))
            }
            Some(Tok::X) => {
                self.pos += 1;
                Ok(BPoly::x())
            }
            Some(Tok::Y) => {
                self.pos += 1;
                Ok(BPoly::y())
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(Tok::Slash) => self.err("'/' is only allowed inside a rational literal p/q"),
            Some(_) => self.err("expected a number, variable or '('"),
            None => self.err("unexpected end of input"),
        }
    }
}

pub fn parse_poly(s: &str) -> Result<BPoly> {
    let toks = lex(s)?;
    if toks.is_empty() {
        return Err(Error::Parse { col: 1, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: s.len() + 1 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

/// Parse a rational literal `p`, `-p` or `p/q`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let p = parse_poly(s.trim())?;
    if !p.is_constant() {
        return Err(Error::Parse { col: 1, msg: format!("'{s}' is not a rational number") });
    }
    Ok(p.coeff(0, 0))
}

impl std::str::FromStr for BPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{rat, ratq};

    #[test]
    fn grammar() {
        let p = parse_poly("x^2*y - 3*x + 1/2").unwrap();
        assert_eq!(p.coeff(2, 1), rat(1));
        assert_eq!(p.coeff(1, 0), rat(-3));
        assert_eq!(p.coeff(0, 0), ratq(1, 2));
        let q = parse_poly("x*(x*y - 1)").unwrap();
        assert_eq!(q.to_string(), "x^2*y - x");
        assert_eq!(parse_poly("-x^2").unwrap().coeff(2, 0), rat(-1));
    }

    #[test]
    fn rejects() {
        assert!(parse_poly("2x").is_err());
        assert!(parse_poly("x y").is_err());
        assert!(parse_poly("x/2").is_err());
        assert!(parse_poly("x^-1").is_err());
        assert!(parse_poly("z").is_err());
        assert!(parse_poly("(x").is_err());
        assert!(parse_poly("").is_err());
    }

    #[test]
    fn display_roundtrip() {
        for s in ["x^3 - 3*x*y^2", "-1/3*x^2 + 2*y - 7", "x^2*y - x", "0", "y^4 + 5/2"] {
            let p = parse_poly(s).unwrap();
            assert_eq!(parse_poly(&p.to_string()).unwrap(), p, "{s}");
        }
    }
}
