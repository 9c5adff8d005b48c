//! A small expression language for diagrams.
//!
//! ```text
//! expr := term { "*" term }                      vertical composition, a * b = a ∘ b
//! term := atom { ("ox" | "⊗") atom }             tensor product
//! atom := "cap" | "cup" | "cross" | "id(" n ")" | "jw(" n ")" | "gn(" n ")"
//!       | "un(" n ")" | "vn(" n ")" | scalar ("·" | ".") atom | "(" expr ")"
//! scalar := "{" rational function in q "}" | number-or-q literal
//! ```
//!
//! Both operators are left-associative and `ox` binds tighter than `*`.

use std::fmt;

use crate::brauer::{OddBrauer, SBMorphism};
use crate::error::{Error, Result};
use crate::jones_wenzl::JonesWenzl;
use crate::scalars::{parse_ratfunc_at, RatFunc};
use crate::tl::TLMorphism;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Cap,
    Cup,
    Cross,
    Id(usize),
    Jw(usize),
    Gn(usize),
    Un(usize),
    Vn(usize),
    Scaled(RatFunc, Box<Expr>),
    Compose(Box<Expr>, Box<Expr>),
    Tensor(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn compose(a: Expr, b: Expr) -> Self {
        Expr::Compose(Box::new(a), Box::new(b))
    }

    pub fn tensor(a: Expr, b: Expr) -> Self {
        Expr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn scaled(c: RatFunc, a: Expr) -> Self {
        Expr::Scaled(c, Box::new(a))
    }

    /// `(source, target)`, or an arity error naming the offending subterm.
    pub fn arity(&self) -> Result<(usize, usize)> {
        let need = |n: usize, min: usize| {
            if n < min {
                Err(Error::ArityMismatch(format!("`{self}` needs n >= {min}")))
            } else {
                Ok(())
            }
        };
        Ok(match self {
            Expr::Cap => (2, 0),
            Expr::Cup => (0, 2),
            Expr::Cross => (2, 2),
            Expr::Id(n) | Expr::Jw(n) => (*n, *n),
            Expr::Gn(n) => {
                need(*n, 2)?;
                (*n, *n)
            }
            Expr::Un(n) => {
                need(*n, 2)?;
                (n - 2, *n)
            }
            Expr::Vn(n) => {
                need(*n, 2)?;
                (*n, n - 2)
            }
            Expr::Scaled(_, a) => a.arity()?,
            Expr::Compose(a, b) => {
                let ((am, an), (bm, bn)) = (a.arity()?, b.arity()?);
                if am != bn {
                    return Err(Error::ArityMismatch(format!(
                        "in `{self}`: `{a}` starts at {am} but `{b}` ends at {bn}"
                    )));
                }
                (bm, an)
            }
            Expr::Tensor(a, b) => {
                let ((am, an), (bm, bn)) = (a.arity()?, b.arity()?);
                (am + bm, an + bn)
            }
        })
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Compose(..) | Expr::Tensor(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Compose(..) => write!(f, "({self})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Cap => write!(f, "cap"),
            Expr::Cup => write!(f, "cup"),
            Expr::Cross => write!(f, "cross"),
            Expr::Id(n) => write!(f, "id({n})"),
            Expr::Jw(n) => write!(f, "jw({n})"),
            Expr::Gn(n) => write!(f, "gn({n})"),
            Expr::Un(n) => write!(f, "un({n})"),
            Expr::Vn(n) => write!(f, "vn({n})"),
            Expr::Scaled(c, a) => {
                write!(f, "{{{c}}}·")?;
                a.fmt_atom(f)
            }
            Expr::Compose(a, b) => {
                write!(f, "{a} * ")?;
                b.fmt_term(f)
            }
            Expr::Tensor(a, b) => {
                a.fmt_term(f)?;
                write!(f, " ox ")?;
                b.fmt_atom(f)
            }
        }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    /// A keyword not followed by another identifier character.
    fn eat_word(&mut self, w: &str) -> bool {
        self.skip_ws();
        let r = self.rest();
        if r.starts_with(w) && !r[w.len()..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.term()?;
        while self.eat("*") {
            acc = Expr::compose(acc, self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Expr> {
        let mut acc = self.atom()?;
        while self.eat_word("ox") || self.eat("⊗") {
            acc = Expr::tensor(acc, self.atom()?);
        }
        Ok(acc)
    }

    fn nat_arg(&mut self) -> Result<usize> {
        if !self.eat("(") {
            return self.err("expected `(`");
        }
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a natural number");
        }
        let n = match self.rest()[..digits].parse::<usize>() {
            Ok(n) if n <= 64 => n,
            _ => return self.err("number too large"),
        };
        self.pos += digits;
        if !self.eat(")") {
            return self.err("expected `)`");
        }
        Ok(n)
    }

    fn scalar_dot(&mut self) -> Result<()> {
        if self.eat("·") || self.eat(".") {
            Ok(())
        } else {
            self.err("expected `·` after a scalar")
        }
    }

    fn atom(&mut self) -> Result<Expr> {
        self.skip_ws();
        for (w, g) in [("cap", Expr::Cap), ("cup", Expr::Cup), ("cross", Expr::Cross)] {
            if self.eat_word(w) {
                return Ok(g);
            }
        }
        let families: [(&str, fn(usize) -> Expr); 5] =
            [("id", Expr::Id), ("jw", Expr::Jw), ("gn", Expr::Gn), ("un", Expr::Un), ("vn", Expr::Vn)];
        for (w, make) in families {
            if self.eat_word(w) {
                return Ok(make(self.nat_arg()?));
            }
        }
        if self.eat("(") {
            let e = self.expr()?;
            if !self.eat(")") {
                return self.err("expected `)`");
            }
            return Ok(e);
        }
        if self.eat("{") {
            let start = self.pos;
            let Some(len) = self.rest().find('}') else {
                return self.err("unclosed `{`");
            };
            let c = parse_ratfunc_at(&self.s[start..start + len], start)?;
            self.pos = start + len + 1;
            self.scalar_dot()?;
            return Ok(Expr::scaled(c, self.atom()?));
        }
        let r = self.rest();
        if r.starts_with(|c: char| c.is_ascii_digit() || c == 'q' || c == '-') {
            let len = r.find(|c: char| !(c.is_ascii_digit() || "q^-/".contains(c))).unwrap_or(r.len());
            let start = self.pos;
            let c = parse_ratfunc_at(&r[..len], start)?;
            self.pos += len;
            self.scalar_dot()?;
            return Ok(Expr::scaled(c, self.atom()?));
        }
        if r.is_empty() {
            self.err("unexpected end of input")
        } else {
            self.err(format!("unexpected `{}`", r.chars().next().unwrap()))
        }
    }
}

pub fn parse(input: &str) -> Result<Expr> {
    let mut p = Parser { s: input, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos != input.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

/// Parses and checks arities.
pub fn parse_typed(input: &str) -> Result<(Expr, usize, usize)> {
    let e = parse(input)?;
    let (m, n) = e.arity()?;
    Ok((e, m, n))
}

fn in_subterm<T>(e: &Expr, r: Result<T>) -> Result<T> {
    r.map_err(|err| match err {
        Error::ArityMismatch(m) => Error::ArityMismatch(format!("{m} (in `{e}`)")),
        other => other,
    })
}

/// Evaluates in the Temperley-Lieb category of `jw`.
pub fn elaborate_stl(e: &Expr, jw: &JonesWenzl) -> Result<TLMorphism> {
    e.arity()?;
    let s = jw.stl();
    Ok(match e {
        Expr::Cap => s.cap(),
        Expr::Cup => s.cup(),
        Expr::Cross => return Err(Error::Unsupported("`cross` does not exist in the Temperley-Lieb category".into())),
        Expr::Id(n) => s.identity(*n),
        Expr::Jw(n) => jw.jw(*n)?,
        Expr::Gn(n) => jw.gn(*n)?,
        Expr::Un(n) => jw.un(*n)?,
        Expr::Vn(n) => jw.vn(*n)?,
        Expr::Scaled(c, a) => elaborate_stl(a, jw)?.scale(c),
        Expr::Compose(a, b) => in_subterm(e, s.compose(&elaborate_stl(a, jw)?, &elaborate_stl(b, jw)?))?,
        Expr::Tensor(a, b) => s.tensor(&elaborate_stl(a, jw)?, &elaborate_stl(b, jw)?),
    })
}

/// Evaluates in the odd Brauer category; the projectors are not available there.
pub fn elaborate_brauer(e: &Expr, sb: &OddBrauer) -> Result<SBMorphism> {
    e.arity()?;
    Ok(match e {
        Expr::Cap => sb.cap(),
        Expr::Cup => sb.cup(),
        Expr::Cross => sb.cross(),
        Expr::Id(n) => sb.identity(*n),
        Expr::Jw(_) | Expr::Gn(_) | Expr::Un(_) | Expr::Vn(_) => {
            return Err(Error::Unsupported(format!("`{e}` is a Temperley-Lieb projector")))
        }
        Expr::Scaled(c, a) => elaborate_brauer(a, sb)?.scale(c),
        Expr::Compose(a, b) => in_subterm(e, sb.compose(&elaborate_brauer(a, sb)?, &elaborate_brauer(b, sb)?))?,
        Expr::Tensor(a, b) => sb.tensor(&elaborate_brauer(a, sb)?, &elaborate_brauer(b, sb)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tl::Stl;

    #[test]
    fn precedence() {
        let e = parse("cap * cup ox id(1) * cup").unwrap();
        assert_eq!(
            e,
            Expr::compose(Expr::compose(Expr::Cap, Expr::tensor(Expr::Cup, Expr::Id(1))), Expr::Cup)
        );
        assert_eq!(parse("cup ⊗ cup").unwrap(), parse("cup ox cup").unwrap());
    }

    #[test]
    fn scalars() {
        let e = parse("{q + q^-1}·cap").unwrap();
        assert_eq!(e, Expr::scaled("q + q^-1".parse().unwrap(), Expr::Cap));
        assert_eq!(parse("2.cup").unwrap(), Expr::scaled(RatFunc::from_int(2), Expr::Cup));
        assert_eq!(parse("-q^2·id(1)").unwrap(), Expr::scaled("-q^2".parse().unwrap(), Expr::Id(1)));
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("cap *"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse("capx"), Err(Error::Parse { .. })));
        assert!(matches!(parse("{1/0}·cap"), Err(Error::Parse { .. })));
        assert!(matches!(parse("cap * cap").unwrap().arity(), Err(Error::ArityMismatch(_))));
    }

    #[test]
    fn bubble_and_zigzag() {
        let jw = JonesWenzl::new(Stl::odd());
        let s = jw.stl();
        let b = elaborate_stl(&parse("cap * cup").unwrap(), &jw).unwrap();
        assert_eq!(b.to_string(), "(-q + q^-1) · [empty]");
        let z = elaborate_stl(&parse("(id(1) ox cap) * (cup ox id(1))").unwrap(), &jw).unwrap();
        assert_eq!(z, s.identity(1).scale(&RatFunc::from_int(s.epsilon().value())));
        assert!(elaborate_stl(&Expr::Cross, &jw).is_err());
    }

    #[test]
    fn printing_round_trips() {
        for src in ["jw(3) * jw(3)", "{1/2*q}·(cap ox cup) * cross", "(cap * cup) ox id(2)", "un(4) * vn(4)"] {
            let e = parse(src).unwrap();
            assert_eq!(parse(&e.to_string()).unwrap(), e, "{src}");
        }
    }
}
