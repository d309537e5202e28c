//! Recursive-descent parser and printer for polynomial text.
//!
//! ```text
//! poly   := sign? term (sign term)*
//! term   := coeff ('*'? factor)*  |  factor ('*'? factor)*
//! coeff  := uint ('/' uint)?
//! factor := ('x' | 'y') ('^' uint)?
//! ```
//!
//! Whitespace may separate any two tokens; juxtaposition multiplies.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{BiPoly, Monomial};
use crate::linalg::Rat;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at offset {offset}: expected {expected}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
}

pub fn parse_poly(text: &str) -> Result<BiPoly, ParseError> {
    Parser::new(text).poly()
}

impl FromStr for BiPoly {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            src: text.as_bytes(),
            pos: 0,
        }
    }

    fn error<T>(&self, expected: &str) -> Result<T, ParseError> {
        Err(ParseError {
            offset: self.pos,
            expected: expected.to_string(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn poly(&mut self) -> Result<BiPoly, ParseError> {
        let mut out = BiPoly::zero();
        let mut negative = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        loop {
            let (c, m) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
            match self.peek() {
                None => return Ok(out),
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.error("'+', '-' or end of input"),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<(Rat, Monomial), ParseError> {
        let mut coeff = Rat::one();
        let mut mono = Monomial::ONE;
        match self.peek() {
            Some(c) if c.is_ascii_digit() => coeff = self.coefficient()?,
            Some(b'x' | b'y') => {}
            _ => return self.error("a coefficient or a variable"),
        }
        loop {
            let star = self.eat(b'*');
            match self.peek() {
                Some(v @ (b'x' | b'y')) => {
                    self.pos += 1;
                    let e = if self.eat(b'^') { self.exponent()? } else { 1 };
                    if v == b'x' {
                        mono.x += e;
                    } else {
                        mono.y += e;
                    }
                }
                _ if star => return self.error("'x' or 'y' after '*'"),
                _ => break,
            }
        }
        Ok((coeff, mono))
    }

    fn digits(&mut self, what: &str) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error(what);
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits"))
    }

    fn coefficient(&mut self) -> Result<Rat, ParseError> {
        let num: BigInt = self.digits("an integer")?.parse().expect("digits");
        if !self.eat(b'/') {
            return Ok(Rat::from_integer(num));
        }
        let at = self.pos;
        let den: BigInt = self.digits("a denominator")?.parse().expect("digits");
        if den.is_zero() {
            return Err(ParseError {
                offset: at,
                expected: "a nonzero denominator".into(),
            });
        }
        Ok(Rat::new(num, den))
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        let at = self.pos;
        let text = self.digits("an exponent")?;
        text.parse().map_err(|_| ParseError {
            offset: at,
            expected: "an exponent that fits in 32 bits".into(),
        })
    }
}

impl fmt::Display for BiPoly {
    /// Graded-lex descending, e.g. `x^6 + y^6 + 1` or `-3/2*x*y^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| b.0.grlex_cmp(a.0));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mut parts = Vec::new();
            if !abs.is_one() || *m == Monomial::ONE {
                parts.push(abs.to_string());
            }
            for (name, e) in [("x", m.x), ("y", m.y)] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
