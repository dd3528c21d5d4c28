//! Text syntax for field elements, neutrices and external numbers.
//!
//! ```text
//! field   := "(" poly ")" [ "/" "(" poly ")" ] | poly [ "/" "(" poly ")" ]
//! poly    := [ "+" | "-" ] mono { ( "+" | "-" ) mono }
//! mono    := coeff [ "*" power ] | power
//! coeff   := digits [ "/" digits ]
//! power   := "e" [ "^" exp ]
//! exp     := [ "-" ] digits | "(" [ "-" ] digits [ "/" digits ] ")"
//! neutrix := "zero" | "full" | "o" | "L" | "cut" "(" rational "," ( "open" | "closed" ) ")"
//! extnum  := field [ ";" neutrix ]
//! ```
//!
//! Printing any value and parsing it back yields an equal value, and the
//! canonical printed forms are fixed points of print∘parse.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::external::ExtNum;
use crate::neutrix::{Boundary, Neutrix};
use crate::valcore::{Exp, FieldElem, Monomial, PSeries, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{msg} at offset {pos}")]
pub struct LiteralError {
    pub pos: usize,
    pub msg: String,
}

pub(crate) struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    pub(crate) fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    /// Character following the next one, after skipping whitespace in
    /// between.
    fn peek_second(&mut self) -> Option<char> {
        self.skip_ws();
        let mut it = self.rest().chars();
        it.next()?;
        it.as_str().trim_start().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), LiteralError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> LiteralError {
        LiteralError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    pub(crate) fn finish(&mut self) -> Result<(), LiteralError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    pub(crate) fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_alphabetic() || c == '_' || (i > 0 && c.is_ascii_digit())))
            .map_or(rest.len(), |(i, _)| i);
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some(&rest[..len])
    }

    fn digits(&mut self) -> Result<BigInt, LiteralError> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected digits"));
        }
        let value = rest[..len].parse::<BigInt>().expect("ascii digits");
        self.pos += len;
        Ok(value)
    }

    /// `digits [ "/" digits ]`, where a slash followed by `(` is left for
    /// the caller.
    fn unsigned_rational(&mut self) -> Result<Rational, LiteralError> {
        let n = self.digits()?;
        if self.peek() == Some('/') && self.peek_second().is_some_and(|c| c.is_ascii_digit()) {
            self.expect('/')?;
            let d = self.digits()?;
            if d.is_zero() {
                return Err(self.error("zero denominator"));
            }
            return Ok(Rational::new(n, d));
        }
        Ok(Rational::from_integer(n))
    }

    pub(crate) fn rational(&mut self) -> Result<Rational, LiteralError> {
        let negative = self.eat('-');
        if !negative {
            self.eat('+');
        }
        let r = self.unsigned_rational()?;
        Ok(if negative { -r } else { r })
    }
}

fn exponent(cur: &mut Cursor<'_>) -> Result<Exp, LiteralError> {
    if cur.eat('(') {
        let q = cur.rational()?;
        cur.expect(')')?;
        return Ok(Exp::new(q));
    }
    let negative = cur.eat('-');
    let n = Rational::from_integer(cur.digits()?);
    Ok(Exp::new(if negative { -n } else { n }))
}

fn power(cur: &mut Cursor<'_>) -> Result<Exp, LiteralError> {
    match cur.ident() {
        Some("e") => {}
        _ => return Err(cur.error("expected 'e'")),
    }
    if cur.eat('^') {
        exponent(cur)
    } else {
        Ok(Exp::integer(1))
    }
}

fn monomial(cur: &mut Cursor<'_>) -> Result<Monomial, LiteralError> {
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let coeff = cur.unsigned_rational()?;
            if cur.eat('*') {
                Ok(Monomial::new(coeff, power(cur)?))
            } else {
                Ok(Monomial::new(coeff, Exp::zero()))
            }
        }
        Some('e') => Ok(Monomial::new(Rational::from_integer(1.into()), power(cur)?)),
        _ => Err(cur.error("expected a coefficient or 'e'")),
    }
}

fn poly(cur: &mut Cursor<'_>) -> Result<PSeries, LiteralError> {
    let mut terms = Vec::new();
    let mut negative = cur.eat('-');
    if !negative {
        cur.eat('+');
    }
    loop {
        let mut m = monomial(cur)?;
        if negative {
            m.coeff = -m.coeff;
        }
        terms.push(m);
        if cur.eat('+') {
            negative = false;
        } else if cur.eat('-') {
            negative = true;
        } else {
            break;
        }
    }
    Ok(PSeries::from_terms(terms))
}

pub(crate) fn field_elem(cur: &mut Cursor<'_>) -> Result<FieldElem, LiteralError> {
    let num = if cur.eat('(') {
        let p = poly(cur)?;
        cur.expect(')')?;
        p
    } else {
        poly(cur)?
    };
    if cur.peek() == Some('/') {
        let at = cur.pos;
        cur.expect('/')?;
        cur.expect('(')?;
        let den = poly(cur)?;
        cur.expect(')')?;
        return FieldElem::from_fraction(num, den).map_err(|_| LiteralError {
            pos: at,
            msg: "zero denominator".into(),
        });
    }
    Ok(FieldElem::from_series(num))
}

pub(crate) fn neutrix(cur: &mut Cursor<'_>) -> Result<Neutrix, LiteralError> {
    let start = cur.pos;
    match cur.ident() {
        Some("zero") => Ok(Neutrix::Zero),
        Some("full") => Ok(Neutrix::Full),
        Some("o") => Ok(Neutrix::infinitesimal()),
        Some("L") => Ok(Neutrix::limited()),
        Some("cut") => {
            cur.expect('(')?;
            let q = cur.rational()?;
            cur.expect(',')?;
            let boundary = match cur.ident() {
                Some("open") => Boundary::Open,
                Some("closed") => Boundary::Closed,
                _ => return Err(cur.error("expected 'open' or 'closed'")),
            };
            cur.expect(')')?;
            Ok(Neutrix::cut(Exp::new(q), boundary))
        }
        _ => Err(LiteralError {
            pos: start,
            msg: "expected a neutrix (zero, full, o, L or cut(q,open|closed))".into(),
        }),
    }
}

pub(crate) fn ext_num(cur: &mut Cursor<'_>) -> Result<ExtNum, LiteralError> {
    let a = field_elem(cur)?;
    let n = if cur.eat(';') {
        neutrix(cur)?
    } else {
        Neutrix::Zero
    };
    Ok(ExtNum::new(a, n))
}

fn parse_all<T>(
    src: &str,
    f: impl FnOnce(&mut Cursor<'_>) -> Result<T, LiteralError>,
) -> Result<T, LiteralError> {
    let mut cur = Cursor::new(src);
    let v = f(&mut cur)?;
    cur.finish()?;
    Ok(v)
}

impl FromStr for FieldElem {
    type Err = LiteralError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_all(s, field_elem)
    }
}

impl FromStr for Neutrix {
    type Err = LiteralError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_all(s, neutrix)
    }
}

/// `a ; N`, or a bare field element for an exact value.
impl FromStr for ExtNum {
    type Err = LiteralError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_all(s, ext_num)
    }
}

/// Parses a rational such as `-7/3`.
pub fn parse_rational(s: &str) -> Result<Rational, LiteralError> {
    parse_all(s, |c| c.rational())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::valcore::rational;

    fn fe(s: &str) -> FieldElem {
        s.parse().unwrap()
    }

    #[test]
    fn field_literals() {
        let x = fe("3/2*e^(1/2) + 2*e^1");
        let expect = &FieldElem::monomial(rational(3, 2), Exp::ratio(1, 2))
            + &FieldElem::monomial(rational(2, 1), Exp::integer(1));
        assert_eq!(x, expect);
        assert_eq!(fe("e"), FieldElem::epsilon());
        assert_eq!(fe("-e^-1"), -FieldElem::eps_pow(Exp::integer(-1)));
        assert_eq!(fe("e^(-3/2)"), FieldElem::eps_pow(Exp::ratio(-3, 2)));
        assert_eq!(fe("1/(1 + e)"), (&FieldElem::one() + &FieldElem::epsilon()).inv().unwrap());
        assert_eq!(fe("(1 + e^2)/(e)"), &FieldElem::epsilon().inv().unwrap() + &FieldElem::epsilon());
        assert_eq!(fe("1 + e - 1"), FieldElem::epsilon());
        assert_eq!(fe("0"), FieldElem::zero());
    }

    #[test]
    fn field_literal_errors() {
        assert!("1/(0)".parse::<FieldElem>().is_err());
        assert!("1/0".parse::<FieldElem>().is_err());
        assert!("e^".parse::<FieldElem>().is_err());
        assert!("2 2".parse::<FieldElem>().is_err());
        assert!("x".parse::<FieldElem>().is_err());
        let err = "1 + ".parse::<FieldElem>().unwrap_err();
        assert_eq!(err.pos, 4);
    }

    #[test]
    fn neutrix_literals() {
        assert_eq!("o".parse::<Neutrix>().unwrap(), Neutrix::infinitesimal());
        assert_eq!("L".parse::<Neutrix>().unwrap(), Neutrix::limited());
        assert_eq!(
            "cut(1, closed)".parse::<Neutrix>().unwrap(),
            Neutrix::cut(Exp::integer(1), Boundary::Closed)
        );
        assert_eq!(
            "cut(-3/2,open)".parse::<Neutrix>().unwrap(),
            Neutrix::cut(Exp::ratio(-3, 2), Boundary::Open)
        );
        assert!("cut(1,half)".parse::<Neutrix>().is_err());
        assert!("l".parse::<Neutrix>().is_err());
    }

    #[test]
    fn ext_literals() {
        let x: ExtNum = "2 + 3*e^1 ; o".parse().unwrap();
        assert_eq!(x, ExtNum::new(FieldElem::from_i64(2), Neutrix::infinitesimal()));
        let y: ExtNum = "0 ; cut(1,closed)".parse().unwrap();
        assert_eq!(y.neutrix(), &Neutrix::cut(Exp::integer(1), Boundary::Closed));
        let z: ExtNum = "7/3".parse().unwrap();
        assert_eq!(z, ExtNum::exact(FieldElem::from_rational(rational(7, 3))));
    }

    #[test]
    fn canonical_forms_are_fixed_points() {
        for s in [
            "3/2*e^(1/2) + 2*e^1",
            "-e^(-3/2) - 1",
            "(1)/(1 + e^1)",
            "(2 - e^(1/3))/(1 + 5/2*e^2)",
            "0",
        ] {
            assert_eq!(fe(s).to_string(), s);
        }
        for s in ["2 ; o", "0 ; cut(1,closed)", "-e^-1 + 1/2 ; cut(1,open)", "0 ; full"] {
            assert_eq!(s.parse::<ExtNum>().unwrap().to_string(), s);
        }
    }
}
