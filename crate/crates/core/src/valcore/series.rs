use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::Rational;

/// An exponent of the infinitesimal `e`. Exponents live in the divisible
/// value group of rationals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exp(Rational);

impl Exp {
    pub fn new(value: Rational) -> Self {
        Exp(value)
    }

    pub fn integer(n: i64) -> Self {
        Exp(Rational::from_integer(n.into()))
    }

    /// `n/d` as an exponent. Panics when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Exp(Rational::new(n.into(), d.into()))
    }

    pub fn zero() -> Self {
        Exp(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }
}

impl From<Rational> for Exp {
    fn from(value: Rational) -> Self {
        Exp(value)
    }
}

impl Add for &Exp {
    type Output = Exp;
    fn add(self, rhs: &Exp) -> Exp {
        Exp(&self.0 + &rhs.0)
    }
}

impl Add for Exp {
    type Output = Exp;
    fn add(self, rhs: Exp) -> Exp {
        Exp(self.0 + rhs.0)
    }
}

impl Sub for &Exp {
    type Output = Exp;
    fn sub(self, rhs: &Exp) -> Exp {
        Exp(&self.0 - &rhs.0)
    }
}

impl Sub for Exp {
    type Output = Exp;
    fn sub(self, rhs: Exp) -> Exp {
        Exp(self.0 - rhs.0)
    }
}

impl Neg for &Exp {
    type Output = Exp;
    fn neg(self) -> Exp {
        Exp(-&self.0)
    }
}

impl Neg for Exp {
    type Output = Exp;
    fn neg(self) -> Exp {
        Exp(-self.0)
    }
}

impl fmt::Display for Exp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Value of the valuation map: a finite exponent, or `+inf` for zero.
///
/// The derived ordering places `Infinite` above every finite exponent.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(Exp),
    Infinite,
}

impl Valuation {
    pub fn finite(&self) -> Option<&Exp> {
        match self {
            Valuation::Finite(q) => Some(q),
            Valuation::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Valuation::Infinite)
    }

    /// Valuation of a product.
    pub fn plus(&self, other: &Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(q) => write!(f, "{q}"),
            Valuation::Infinite => f.write_str("+inf"),
        }
    }
}

/// A single term `coeff * e^exp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exp: Exp,
    pub coeff: Rational,
}

impl Monomial {
    pub fn new(coeff: Rational, exp: Exp) -> Self {
        Monomial { exp, coeff }
    }
}

/// Finite generalized power series in `e` with rational exponents.
///
/// Terms are kept sorted by strictly increasing exponent and carry nonzero
/// coefficients; the empty series is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PSeries {
    terms: Vec<Monomial>,
}

impl PSeries {
    pub fn zero() -> Self {
        PSeries { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Exp::zero())
    }

    pub fn monomial(coeff: Rational, exp: Exp) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        PSeries {
            terms: vec![Monomial { exp, coeff }],
        }
    }

    /// Builds a series from arbitrary terms, merging equal exponents and
    /// dropping zero coefficients.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut acc: BTreeMap<Exp, Rational> = BTreeMap::new();
        for t in terms {
            *acc.entry(t.exp).or_insert_with(Rational::zero) += t.coeff;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: BTreeMap<Exp, Rational>) -> Self {
        PSeries {
            terms: acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(exp, coeff)| Monomial { exp, coeff })
                .collect(),
        }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].exp.is_zero() && self.terms[0].coeff.is_one()
    }

    /// Lowest-exponent term.
    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    pub fn max_exp(&self) -> Option<&Exp> {
        self.terms.last().map(|t| &t.exp)
    }

    pub fn valuation(&self) -> Valuation {
        match self.leading() {
            Some(t) => Valuation::Finite(t.exp.clone()),
            None => Valuation::Infinite,
        }
    }

    pub fn coefficient(&self, exp: &Exp) -> Rational {
        self.terms
            .binary_search_by(|t| t.exp.cmp(exp))
            .map(|i| self.terms[i].coeff.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn scale(&self, c: &Rational) -> PSeries {
        if c.is_zero() {
            return PSeries::zero();
        }
        PSeries {
            terms: self
                .terms
                .iter()
                .map(|t| Monomial {
                    exp: t.exp.clone(),
                    coeff: &t.coeff * c,
                })
                .collect(),
        }
    }

    /// Multiplies by `e^by`.
    pub fn shift(&self, by: &Exp) -> PSeries {
        PSeries {
            terms: self
                .terms
                .iter()
                .map(|t| Monomial {
                    exp: &t.exp + by,
                    coeff: t.coeff.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> PSeries {
        if m.coeff.is_zero() {
            return PSeries::zero();
        }
        PSeries {
            terms: self
                .terms
                .iter()
                .map(|t| Monomial {
                    exp: &t.exp + &m.exp,
                    coeff: &t.coeff * &m.coeff,
                })
                .collect(),
        }
    }

    /// Long division by `divisor`, collecting quotient terms with exponent
    /// at most `upto`. Returns the truncated quotient and the remainder.
    ///
    /// Every step raises the remainder's leading exponent by a positive
    /// amount drawn from the finitely many exponent differences of the
    /// operands, so the loop is bounded.
    pub fn div_until(&self, divisor: &PSeries, upto: &Exp) -> (PSeries, PSeries) {
        let lead = divisor
            .leading()
            .expect("long division by the zero series")
            .clone();
        let lead_inv = lead.coeff.recip();
        let mut quotient = Vec::new();
        let mut rem = self.clone();
        while let Some(r) = rem.leading() {
            let exp = &r.exp - &lead.exp;
            if &exp > upto {
                break;
            }
            let q = Monomial {
                exp,
                coeff: &r.coeff * &lead_inv,
            };
            rem = &rem - &divisor.mul_monomial(&q);
            quotient.push(q);
        }
        (PSeries { terms: quotient }, rem)
    }

    /// Exact quotient `self / divisor` when it is a finite series.
    pub fn exact_div(&self, divisor: &PSeries) -> Option<PSeries> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(PSeries::zero());
        }
        let bound = self.max_exp()? - divisor.max_exp()?;
        let (q, rem) = self.div_until(divisor, &bound);
        rem.is_zero().then_some(q)
    }

    /// Sign of the leading coefficient (the sign of the element in the
    /// ordered field, since `e` is positive).
    pub fn signum(&self) -> std::cmp::Ordering {
        match self.leading() {
            None => std::cmp::Ordering::Equal,
            Some(t) if t.coeff.is_positive() => std::cmp::Ordering::Greater,
            Some(_) => std::cmp::Ordering::Less,
        }
    }
}

impl Add for &PSeries {
    type Output = PSeries;
    fn add(self, rhs: &PSeries) -> PSeries {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (a, b) = (&self.terms[i], &rhs.terms[j]);
            match a.exp.cmp(&b.exp) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a.coeff + &b.coeff;
                    if !c.is_zero() {
                        out.push(Monomial {
                            exp: a.exp.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        PSeries { terms: out }
    }
}

impl Neg for &PSeries {
    type Output = PSeries;
    fn neg(self) -> PSeries {
        PSeries {
            terms: self
                .terms
                .iter()
                .map(|t| Monomial {
                    exp: t.exp.clone(),
                    coeff: -&t.coeff,
                })
                .collect(),
        }
    }
}

impl Sub for &PSeries {
    type Output = PSeries;
    fn sub(self, rhs: &PSeries) -> PSeries {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &PSeries {
    type Output = PSeries;
    fn mul(self, rhs: &PSeries) -> PSeries {
        if self.is_zero() || rhs.is_zero() {
            return PSeries::zero();
        }
        if rhs.terms.len() == 1 {
            return self.mul_monomial(&rhs.terms[0]);
        }
        if self.terms.len() == 1 {
            return rhs.mul_monomial(&self.terms[0]);
        }
        let mut acc: BTreeMap<Exp, Rational> = BTreeMap::new();
        for a in &self.terms {
            for b in &rhs.terms {
                *acc.entry(&a.exp + &b.exp).or_insert_with(Rational::zero) += &a.coeff * &b.coeff;
            }
        }
        PSeries::from_map(acc)
    }
}
