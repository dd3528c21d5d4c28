use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use super::series::{Exp, Monomial, PSeries, Valuation};
use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
}

/// Element of the fraction field of finite generalized power series in a
/// positive infinitesimal `e`.
///
/// The denominator is normalized so that its lowest-exponent term is
/// exactly `1`, which makes the sign of an element the sign of the leading
/// coefficient of its numerator. Representations are not unique; equality
/// and order are decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct FieldElem {
    num: PSeries,
    den: PSeries,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem {
            num: PSeries::zero(),
            den: PSeries::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The distinguished positive infinitesimal `e`.
    pub fn epsilon() -> Self {
        Self::eps_pow(Exp::integer(1))
    }

    /// `e^q`.
    pub fn eps_pow(q: Exp) -> Self {
        Self::monomial(Rational::one(), q)
    }

    pub fn monomial(coeff: Rational, exp: Exp) -> Self {
        Self::from_series(PSeries::monomial(coeff, exp))
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_series(PSeries::constant(c))
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_series(num: PSeries) -> Self {
        FieldElem {
            num,
            den: PSeries::one(),
        }
    }

    pub fn from_fraction(num: PSeries, den: PSeries) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PSeries, den: PSeries) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return FieldElem { num, den };
        }
        if den.terms().len() == 1 {
            let lead = &den.terms()[0];
            let c = lead.coeff.recip();
            let shift = -&lead.exp;
            return FieldElem {
                num: num.shift(&shift).scale(&c),
                den: PSeries::one(),
            };
        }
        if num == den {
            return Self::one();
        }
        if let Some(q) = num.exact_div(&den) {
            return Self::from_series(q);
        }
        let lead = den.leading().expect("nonzero denominator").clone();
        let c = lead.coeff.recip();
        let shift = -&lead.exp;
        FieldElem {
            num: num.shift(&shift).scale(&c),
            den: den.shift(&shift).scale(&c),
        }
    }

    pub fn numerator(&self) -> &PSeries {
        &self.num
    }

    pub fn denominator(&self) -> &PSeries {
        &self.den
    }

    /// The series itself when the denominator is `1`.
    pub fn as_series(&self) -> Option<&PSeries> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    /// `v(x)`: leading exponent of the numerator minus that of the
    /// denominator, with `+inf` for zero.
    pub fn valuation(&self) -> Valuation {
        match (self.num.leading(), self.den.leading()) {
            (Some(n), Some(d)) => Valuation::Finite(&n.exp - &d.exp),
            _ => Valuation::Infinite,
        }
    }

    /// Sign relative to zero.
    pub fn signum(&self) -> Ordering {
        self.num.signum()
    }

    /// Long-division expansion of `num/den`, keeping exponents `<= upto`.
    pub fn series_expand(&self, upto: &Exp) -> PSeries {
        if self.num.is_zero() {
            return PSeries::zero();
        }
        self.num.div_until(&self.den, upto).0
    }

    pub fn abs(&self) -> FieldElem {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for FieldElem {}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        if self.den == rhs.den {
            return FieldElem::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        FieldElem::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        self + &(-rhs)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        if self.is_zero() || rhs.is_zero() {
            return FieldElem::zero();
        }
        FieldElem::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::from_i64(n)
    }
}

impl From<Rational> for FieldElem {
    fn from(c: Rational) -> Self {
        FieldElem::from_rational(c)
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::one()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, t: &Monomial, first: bool) -> fmt::Result {
    let negative = t.coeff < Rational::zero();
    let mag = if negative { -&t.coeff } else { t.coeff.clone() };
    match (first, negative) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if t.exp.is_zero() {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}*")?;
    }
    if t.exp.is_integer() {
        write!(f, "e^{}", t.exp)
    } else {
        write!(f, "e^({})", t.exp)
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, t) in self.terms().iter().enumerate() {
            write_monomial(f, t, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
