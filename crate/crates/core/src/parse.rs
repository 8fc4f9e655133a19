//! Text specs for Seifert invariants.
//!
//! ```text
//! spec      := '-'? brieskorn | '-(' raw ')' | raw
//! brieskorn := 'sigma:' int (',' int)* | 'sigma(' int (',' int)* ')'
//! raw       := int (';' int '/' int (',' int '/' int)*)?
//! ```
//!
//! A leading `-` before `sigma` or `(` reverses orientation; elsewhere it is
//! the sign of `b`, so `-2` is the circle bundle with `b = -2`.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result, SeifertInvariants};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecBody {
    Raw { b: i64, pairs: Vec<(i64, i64)> },
    Brieskorn(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertSpec {
    pub reversed: bool,
    pub body: SpecBody,
}

impl SeifertSpec {
    pub fn resolve(&self) -> Result<SeifertInvariants> {
        let si = match &self.body {
            SpecBody::Raw { b, pairs } => SeifertInvariants::normalize(*b, pairs)?,
            SpecBody::Brieskorn(m) => SeifertInvariants::brieskorn(m)?,
        };
        Ok(if self.reversed { si.reverse_orientation() } else { si })
    }
}

impl fmt::Display for SeifertSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &mut dyn Iterator<Item = String>| xs.collect::<Vec<_>>().join(",");
        match (&self.body, self.reversed) {
            (SpecBody::Brieskorn(m), r) => {
                write!(f, "{}sigma:{}", if r { "-" } else { "" }, list(&mut m.iter().map(|a| a.to_string())))
            }
            (SpecBody::Raw { b, pairs }, r) => {
                let mut s = b.to_string();
                if !pairs.is_empty() {
                    s.push(';');
                    s.push_str(&list(&mut pairs.iter().map(|(a, q)| format!("{a}/{q}"))));
                }
                if r {
                    write!(f, "-({s})")
                } else {
                    f.write_str(&s)
                }
            }
        }
    }
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.s.len() - trimmed.len();
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

    fn expect(&mut self, tok: &str) -> Result<()> {
        if self.eat(tok) {
            Ok(())
        } else {
            self.err(format!("expected '{tok}'"))
        }
    }

    fn int(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let sign = usize::from(r.starts_with(['-', '+']));
        let digits = r[sign..].bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected an integer");
        }
        let tok = &r[..sign + digits];
        match tok.parse::<i64>() {
            Ok(v) => {
                self.pos = start + tok.len();
                Ok(v)
            }
            Err(_) => self.err(format!("integer {tok} out of range")),
        }
    }

    fn int_list(&mut self) -> Result<Vec<i64>> {
        let mut v = vec![self.int()?];
        while self.eat(",") {
            v.push(self.int()?);
        }
        Ok(v)
    }

    fn raw(&mut self) -> Result<SpecBody> {
        let b = self.int()?;
        let mut pairs = Vec::new();
        if self.eat(";") {
            loop {
                let a = self.int()?;
                self.expect("/")?;
                pairs.push((a, self.int()?));
                if !self.eat(",") {
                    break;
                }
            }
        }
        Ok(SpecBody::Raw { b, pairs })
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.rest().is_empty() {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

pub fn parse_spec(s: &str) -> Result<SeifertSpec> {
    let mut c = Cursor { s, pos: 0 };
    c.skip_ws();
    let save = c.pos;
    let reversed = c.eat("-") && {
        c.skip_ws();
        let r = c.rest();
        r.starts_with("sigma") || r.starts_with('(')
    };
    if !reversed {
        c.pos = save;
    }
    let body = if c.eat("sigma") {
        if c.eat(":") {
            SpecBody::Brieskorn(c.int_list()?)
        } else if c.eat("(") {
            let m = c.int_list()?;
            c.expect(")")?;
            SpecBody::Brieskorn(m)
        } else {
            return c.err("expected ':' or '(' after 'sigma'");
        }
    } else if reversed {
        c.expect("(")?;
        let body = c.raw()?;
        c.expect(")")?;
        body
    } else {
        c.raw()?
    };
    c.finish()?;
    Ok(SeifertSpec { reversed, body })
}

impl FromStr for SeifertSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_spec(s)
    }
}

/// Parse and resolve in one step.
pub fn parse_seifert(s: &str) -> Result<SeifertInvariants> {
    parse_spec(s)?.resolve()
}
