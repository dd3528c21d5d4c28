//! Exact arithmetic in a computable non-archimedean ordered field.
//!
//! Elements are quotients of finite sums `c_1 e^{q_1} + ... + c_n e^{q_n}`
//! with rational coefficients and rational exponents, where `e` is a fixed
//! positive infinitesimal. The value group is the rationals, so it is
//! divisible, and valuation, order and equality are all decidable. No
//! floating point is used anywhere.

mod field;
mod series;

pub use field::{FieldElem, FieldError};
pub use series::{Exp, Monomial, PSeries, Valuation};

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics when `d == 0`.
pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
