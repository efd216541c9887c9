//! Knot expressions such as `2*3_1 # -5_1 # T(2,5)`.
//!
//! ```text
//! expr  := term (('#' | '+' | '-') term)*     binary '-' adds the mirror
//! term  := '-' term | count? atom
//! count := INT ('*' | '·')?
//! atom  := NAME | 'T(' INT ',' INT ')' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored; the Unicode minus sign and subscript digits are
//! accepted.

use std::fmt;

use super::braid::BraidWord;
use super::matrix::SeifertMatrix;
use super::table::KnotTable;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotExpr {
    Named(String),
    Torus(u64, u64),
    Mirror(Box<KnotExpr>),
    Sum(Vec<KnotExpr>),
    Multiple(u64, Box<KnotExpr>),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u64),
    Name(String),
    Op(char),
}

fn is_name_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || ('₀'..='₉').contains(&c)
}

fn tokenize(s: &str) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
        } else if is_name_char(c) {
            let start = i;
            while i < chars.len() && is_name_char(chars[i]) {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let tok = if word.chars().all(|c| c.is_ascii_digit()) {
                Tok::Int(word.parse().map_err(|_| Error::Expression { column: col, message: format!("integer `{word}` too large") })?)
            } else {
                Tok::Name(word)
            };
            out.push((tok, col));
        } else {
            let op = match c {
                '−' | '–' => '-',
                '·' | '×' => '*',
                '+' | '-' | '#' | '*' | '(' | ')' | ',' => c,
                _ => return Err(Error::Expression { column: col, message: format!("unexpected character `{c}`") }),
            };
            out.push((Tok::Op(op), col));
            i += 1;
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn column(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Expression { column: self.column(), message: message.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            self.err(format!("expected `{op}`"))
        }
    }

    fn expr(&mut self) -> Result<KnotExpr> {
        let mut terms = vec![self.term()?];
        loop {
            if self.eat('#') || self.eat('+') {
                terms.push(self.term()?);
            } else if self.eat('-') {
                terms.push(KnotExpr::Mirror(Box::new(self.term()?)));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { KnotExpr::Sum(terms) })
    }

    fn term(&mut self) -> Result<KnotExpr> {
        if self.eat('-') {
            return Ok(KnotExpr::Mirror(Box::new(self.term()?)));
        }
        if let Some(Tok::Int(n)) = self.peek().cloned() {
            self.pos += 1;
            self.eat('*');
            let inner = self.atom()?;
            return Ok(KnotExpr::Multiple(n, Box::new(inner)));
        }
        self.atom()
    }

    fn int(&mut self) -> Result<u64> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn atom(&mut self) -> Result<KnotExpr> {
        match self.peek().cloned() {
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Name(name)) => {
                self.pos += 1;
                if (name == "T" || name == "t") && self.peek() == Some(&Tok::Op('(')) {
                    self.pos += 1;
                    let p = self.int()?;
                    self.expect(',')?;
                    let q = self.int()?;
                    self.expect(')')?;
                    Ok(KnotExpr::Torus(p, q))
                } else {
                    Ok(KnotExpr::Named(name))
                }
            }
            Some(_) => self.err("expected a knot name, torus knot or parenthesis"),
            None => self.err("unexpected end of expression"),
        }
    }
}

impl KnotExpr {
    pub fn parse(s: &str) -> Result<Self> {
        let toks = tokenize(s)?;
        let mut p = Parser { end: s.chars().count() + 1, toks, pos: 0 };
        let e = p.expr()?;
        if p.pos != p.toks.len() {
            return p.err("unexpected trailing input");
        }
        Ok(e)
    }

    /// The Seifert matrix: table lookups and torus braids combined by block
    /// sums and mirrors.
    pub fn resolve(&self, table: &KnotTable) -> Result<SeifertMatrix> {
        match self {
            KnotExpr::Named(name) => table
                .get(name)
                .map(|e| e.matrix.clone())
                .ok_or_else(|| Error::UnknownKnot(name.clone())),
            KnotExpr::Torus(p, q) => BraidWord::torus(*p, *q)?.seifert_matrix(),
            KnotExpr::Mirror(e) => Ok(e.resolve(table)?.mirror()),
            KnotExpr::Sum(terms) => terms
                .iter()
                .try_fold(SeifertMatrix::empty(), |acc, t| Ok(acc.connected_sum(&t.resolve(table)?))),
            KnotExpr::Multiple(n, e) => Ok(e.resolve(table)?.repeat(*n as usize)),
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Named(n) => f.write_str(n),
            KnotExpr::Torus(p, q) => write!(f, "T({p},{q})"),
            KnotExpr::Mirror(e) => match **e {
                KnotExpr::Sum(_) => write!(f, "-({e})"),
                _ => write!(f, "-{e}"),
            },
            KnotExpr::Sum(ts) => {
                let parts: Vec<String> = ts.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(" # "))
            }
            KnotExpr::Multiple(n, e) => match **e {
                KnotExpr::Sum(_) => write!(f, "{n}*({e})"),
                _ => write!(f, "{n}*{e}"),
            },
        }
    }
}

/// Parse and resolve in one step.
pub fn resolve_expression(s: &str, table: &KnotTable) -> Result<SeifertMatrix> {
    KnotExpr::parse(s)?.resolve(table)
}
