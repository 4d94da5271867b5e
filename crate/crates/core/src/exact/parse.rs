//! Small recursive-descent parser for univariate polynomials in `t`.
//!
//! Accepts sums, products (explicit `*` or juxtaposition), integer powers,
//! parentheses and rational literals (`3`, `1/2`, `0.25`).

use super::rational::parse_rational;
use super::upoly::UniPoly;
use crate::error::{Error, Result};

pub fn parse_unipoly(src: &str) -> Result<UniPoly> {
    let mut p = Parser { src, chars: src.char_indices().collect(), pos: 0 };
    let value = p.expr()?;
    p.skip_ws();
    if p.pos != p.chars.len() {
        return Err(p.error("trailing input"));
    }
    Ok(value)
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, reason: &str) -> Error {
        let at = self.chars.get(self.pos).map(|(i, _)| *i).unwrap_or(self.src.len());
        Error::Parse {
            token: self.src.to_string(),
            reason: format!("{reason} at offset {at}"),
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|(_, c)| *c)
    }

    fn expr(&mut self) -> Result<UniPoly> {
        let mut acc = self.term()?;
        loop {
            self.skip_ws();
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<UniPoly> {
        self.skip_ws();
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                return Ok(-self.term()?);
            }
            Some('+') => {
                self.pos += 1;
                return self.term();
            }
            _ => self.power()?,
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(c) if c == 't' || c == '(' || c.is_ascii_digit() || c == '.' => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<UniPoly> {
        let base = self.atom()?;
        self.skip_ws();
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.peek().is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
            let k: usize = digits.parse().map_err(|_| self.error("expected exponent"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<UniPoly> {
        self.skip_ws();
        match self.peek() {
            Some('t') => {
                self.pos += 1;
                Ok(UniPoly::t())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let start = self.pos;
                let mut seen_slash = false;
                while let Some(c) = self.peek() {
                    if c.is_ascii_digit() || c == '.' {
                        self.pos += 1;
                    } else if c == '/' && !seen_slash {
                        seen_slash = true;
                        self.pos += 1;
                    } else {
                        break;
                    }
                }
                let lit: String = self.chars[start..self.pos].iter().map(|(_, c)| c).collect();
                let value = parse_rational(&lit)?;
                Ok(UniPoly::constant(value))
            }
            _ => Err(self.error("expected a number, 't' or '('")),
        }
    }
}

/// Parses a comma-separated list of polynomials.
pub fn parse_unipoly_list(src: &str) -> Result<Vec<UniPoly>> {
    src.split(',').map(parse_unipoly).collect()
}
