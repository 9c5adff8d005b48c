//! Recursive-descent reader for rational expressions in `q`.
//!
//! ```text
//! expr   := ["-"] term { ("+" | "-") term }
//! term   := factor { ["*" | "/"] factor }      juxtaposition multiplies
//! factor := atom [ "^" ["-"] int ]
//! atom   := int | "q" | "(" expr ")" | "-" factor
//! ```

use super::{LaurentPoly, RatFunc, Rational};
use crate::error::{Error, Result};

struct Reader<'a> {
    s: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Reader<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.base + self.pos, msg: msg.into() })
    }

    fn expr(&mut self) -> Result<RatFunc> {
        let mut acc = if self.peek() == Some(b'-') {
            self.pos += 1;
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RatFunc> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.factor()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    acc = acc.div(&d).map_err(|_| Error::Parse { pos: self.base + at, msg: "division by zero".into() })?;
                }
                Some(c) if c == b'q' || c == b'(' || c.is_ascii_digit() => {
                    acc = &acc * &self.factor()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RatFunc> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let neg = if self.peek() == Some(b'-') {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = self.int()?;
            let e: i32 = match i32::try_from(&e) {
                Ok(v) => v,
                Err(_) => return self.err("exponent too large"),
            };
            let e = if neg { -e } else { e };
            return match base.pow(e) {
                Ok(v) => Ok(v),
                Err(_) => self.err("zero raised to a negative power"),
            };
        }
        Ok(base)
    }

    fn int(&mut self) -> Result<num_bigint::BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(txt.parse().unwrap())
    }

    fn atom(&mut self) -> Result<RatFunc> {
        match self.peek() {
            Some(b'q') => {
                self.pos += 1;
                Ok(RatFunc::q())
            }
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected `)`");
                }
                self.pos += 1;
                Ok(v)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.int()?;
                Ok(RatFunc::from_poly(LaurentPoly::constant(Rational::from_integer(n))))
            }
            Some(c) => self.err(format!("unexpected `{}`", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

/// Parses a scalar; `offset` is added to reported error positions.
pub(crate) fn parse_ratfunc_at(s: &str, offset: usize) -> Result<RatFunc> {
    let mut r = Reader { s: s.as_bytes(), pos: 0, base: offset };
    if r.peek().is_none() {
        return r.err("empty scalar");
    }
    let v = r.expr()?;
    if r.peek().is_some() {
        return r.err("trailing input");
    }
    Ok(v)
}

pub(crate) fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    parse_ratfunc_at(s, 0)
}

