//! Knot expressions: names joined by `#`, with postfix `*` for the mirror.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum KnotExpression {
    Knot(String),
    Mirror(Box<KnotExpression>),
    Sum(Vec<KnotExpression>),
}

impl KnotExpression {
    /// Leaf names, in order of appearance.
    pub fn names(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            KnotExpression::Knot(n) => out.push(n),
            KnotExpression::Mirror(e) => e.collect_names(out),
            KnotExpression::Sum(parts) => parts.iter().for_each(|p| p.collect_names(out)),
        }
    }

    /// Replace every leaf named `from` by `to`.
    pub fn substitute(&self, from: &str, to: &str) -> Self {
        match self {
            KnotExpression::Knot(n) if n == from => KnotExpression::Knot(to.to_string()),
            KnotExpression::Knot(_) => self.clone(),
            KnotExpression::Mirror(e) => KnotExpression::Mirror(Box::new(e.substitute(from, to))),
            KnotExpression::Sum(parts) => KnotExpression::Sum(parts.iter().map(|p| p.substitute(from, to)).collect()),
        }
    }
}

impl fmt::Display for KnotExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpression::Knot(n) => f.write_str(n),
            KnotExpression::Mirror(e) => match **e {
                KnotExpression::Sum(_) => write!(f, "({e})*"),
                _ => write!(f, "{e}*"),
            },
            KnotExpression::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" # ")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::str::FromStr for KnotExpression {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_knot_expression(s)
    }
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..].chars().next().map_or(0, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Syntax {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn sum(&mut self) -> Result<KnotExpression> {
        let mut parts = vec![self.factor()?];
        while self.peek() == Some('#') {
            self.pos += 1;
            parts.push(self.factor()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            KnotExpression::Sum(parts)
        })
    }

    fn factor(&mut self) -> Result<KnotExpression> {
        let mut e = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(c) if c.is_ascii_alphanumeric() => {
                let start = self.pos;
                let len = self.text[start..]
                    .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                    .unwrap_or(self.text.len() - start);
                self.pos += len;
                KnotExpression::Knot(self.text[start..self.pos].to_string())
            }
            Some(c) => return Err(self.error(format!("unexpected {c:?}"))),
            None => return Err(self.error("expected a knot name")),
        };
        loop {
            match self.peek() {
                Some('*') => self.pos += 1,
                Some('^') if self.text[self.pos..].starts_with("^*") => self.pos += 2,
                _ => break,
            }
            e = KnotExpression::Mirror(Box::new(e));
        }
        Ok(e)
    }
}

/// Parse `name*? (# name*?)*`; `^*` is accepted for `*` and parentheses group.
pub fn parse_knot_expression(text: &str) -> Result<KnotExpression> {
    let mut p = Parser { text, pos: 0 };
    let e = p.sum()?;
    if p.peek().is_some() {
        return Err(p.error("trailing input"));
    }
    Ok(e)
}
