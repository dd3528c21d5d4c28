//! Terms over `{0, 1, err, +, ·, −, ⁻¹, N}`.
//!
//! ```text
//! term    := sum
//! sum     := prod { ("+" | "-") prod }
//! prod    := unary { "*" postfix }
//! unary   := "-" unary | postfix
//! postfix := atom { "^-1" }
//! atom    := "0" | "1" | "err" | "N" "(" term ")" | ident | "(" term ")"
//! ```
//!
//! `a - b` is sugar for `a + (-b)`. A minus sign directly after `*` is
//! rejected so that `x*-y` has to be written `x*(-y)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Err,
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Inv(Box<Term>),
    NOf(Box<Term>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {pos}: {msg}")]
pub struct SyntaxError {
    pub pos: usize,
    pub msg: String,
}

// Constructors build syntax, they are not arithmetic.
#[allow(clippy::should_implement_trait)]
impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn add(a: Term, b: Term) -> Term {
        Term::Add(Box::new(a), Box::new(b))
    }

    pub fn mul(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn neg(a: Term) -> Term {
        Term::Neg(Box::new(a))
    }

    pub fn inv(a: Term) -> Term {
        Term::Inv(Box::new(a))
    }

    pub fn nof(a: Term) -> Term {
        Term::NOf(Box::new(a))
    }

    /// Variables in order of first appearance, left to right.
    pub fn vars(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    pub(crate) fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Term::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone());
                }
            }
            Term::Zero | Term::One | Term::Err => {}
            Term::Add(a, b) | Term::Mul(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Term::Neg(a) | Term::Inv(a) | Term::NOf(a) => a.collect_vars(out),
        }
    }

    pub fn var_set(&self) -> BTreeSet<String> {
        self.vars().into_iter().collect()
    }

    pub fn mentions_err(&self) -> bool {
        match self {
            Term::Err => true,
            Term::Var(_) | Term::Zero | Term::One => false,
            Term::Add(a, b) | Term::Mul(a, b) => a.mentions_err() || b.mentions_err(),
            Term::Neg(a) | Term::Inv(a) | Term::NOf(a) => a.mentions_err(),
        }
    }

    fn level(&self) -> Level {
        match self {
            Term::Add(..) => Level::Sum,
            Term::Mul(..) => Level::Prod,
            Term::Neg(_) => Level::Unary,
            Term::Inv(_) => Level::Postfix,
            _ => Level::Atom,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, ctx: Level) -> fmt::Result {
        if self.level() < ctx {
            f.write_str("(")?;
            self.write_at(f, Level::Sum)?;
            return f.write_str(")");
        }
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Err => f.write_str("err"),
            Term::Add(a, b) => {
                a.write_at(f, Level::Sum)?;
                match b.as_ref() {
                    Term::Neg(c) => {
                        f.write_str(" - ")?;
                        c.write_at(f, Level::Prod)
                    }
                    _ => {
                        f.write_str(" + ")?;
                        b.write_at(f, Level::Prod)
                    }
                }
            }
            Term::Mul(a, b) => {
                a.write_at(f, Level::Prod)?;
                f.write_str("*")?;
                b.write_at(f, Level::Postfix)
            }
            Term::Neg(a) => {
                f.write_str("-")?;
                a.write_at(f, Level::Unary)
            }
            Term::Inv(a) => {
                a.write_at(f, Level::Postfix)?;
                f.write_str("^-1")
            }
            Term::NOf(a) => {
                f.write_str("N(")?;
                a.write_at(f, Level::Sum)?;
                f.write_str(")")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Sum,
    Prod,
    Unary,
    Postfix,
    Atom,
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, Level::Sum)
    }
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    pub(crate) fn at(src: &'a str, pos: usize) -> Self {
        Parser { src, pos }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.src.len() - t.len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> SyntaxError {
        SyntaxError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), SyntaxError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let first = rest.chars().next()?;
        if !(first.is_ascii_alphabetic() || first == '_') {
            return None;
        }
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        Some(&rest[..len])
    }

    pub(crate) fn term(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.prod()?;
        loop {
            if self.eat('+') {
                t = Term::add(t, self.prod()?);
            } else if self.eat('-') {
                t = Term::add(t, Term::neg(self.prod()?));
            } else {
                return Ok(t);
            }
        }
    }

    fn prod(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.unary()?;
        while self.eat('*') {
            if self.peek() == Some('-') {
                return Err(self.error("unary minus after '*' needs parentheses"));
            }
            t = Term::mul(t, self.postfix()?);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term, SyntaxError> {
        if self.eat('-') {
            Ok(Term::neg(self.unary()?))
        } else {
            self.postfix()
        }
    }

    fn postfix(&mut self) -> Result<Term, SyntaxError> {
        let mut t = self.atom()?;
        loop {
            let save = self.pos;
            if self.eat('^') {
                if self.eat('-') && self.eat('1') {
                    t = Term::inv(t);
                    continue;
                }
                self.pos = save;
                return Err(self.error("expected '^-1'"));
            }
            return Ok(t);
        }
    }

    fn atom(&mut self) -> Result<Term, SyntaxError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let t = self.term()?;
                self.expect(')')?;
                Ok(t)
            }
            Some(c) if c.is_ascii_digit() => {
                let rest = self.rest();
                let len = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
                let t = match &rest[..len] {
                    "0" => Term::Zero,
                    "1" => Term::One,
                    other => {
                        return Err(self.error(format!("only the constants 0 and 1 are terms, found '{other}'")))
                    }
                };
                self.pos += len;
                Ok(t)
            }
            _ => match self.ident() {
                Some("err") => Ok(Term::Err),
                Some("N") => {
                    if self.peek() != Some('(') {
                        return Err(self.error("expected '(' after N"));
                    }
                    self.pos += 1;
                    let t = self.term()?;
                    self.expect(')')?;
                    Ok(Term::nof(t))
                }
                Some(name) => Ok(Term::Var(name.to_string())),
                None => {
                    self.pos = start;
                    Err(match self.peek() {
                        Some(c) => self.error(format!("unexpected '{c}'")),
                        None => self.error("unexpected end of input"),
                    })
                }
            },
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

impl FromStr for Term {
    type Err = SyntaxError;

    fn from_str(s: &str) -> Result<Self, SyntaxError> {
        let mut p = Parser::new(s);
        let t = p.term()?;
        if !p.at_end() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(t)
    }
}

pub fn parse_term(s: &str) -> Result<Term, SyntaxError> {
    s.parse()
}
