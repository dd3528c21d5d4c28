//! External numbers `a + A`: a field element translated by a neutrix.
//!
//! Arithmetic is Minkowski arithmetic on the underlying sets. Values keep
//! whatever precise representative they were built from; equality is coset
//! equality, so `(5e, L)` and `(0, L)` compare equal.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use crate::neutrix::{Boundary, BoundaryRule, Neutrix};
use crate::valcore::{FieldElem, PSeries};

#[derive(Clone, Debug)]
pub struct ExtNum {
    precise: FieldElem,
    neutrix: Neutrix,
}

/// Result of the set quotient `{x : x·B ⊆ A}`, which may be empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Quotient {
    Empty,
    Set(ExtNum),
}

impl Quotient {
    pub fn as_set(&self) -> Option<&ExtNum> {
        match self {
            Quotient::Empty => None,
            Quotient::Set(x) => Some(x),
        }
    }

    /// Membership of a field element in the quotient set.
    pub fn contains(&self, x: &FieldElem) -> bool {
        self.as_set().is_some_and(|s| s.contains(x))
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quotient::Empty => f.write_str("empty"),
            Quotient::Set(x) => write!(f, "{x}"),
        }
    }
}

impl ExtNum {
    pub fn new(precise: FieldElem, neutrix: Neutrix) -> Self {
        ExtNum { precise, neutrix }
    }

    /// `a + {0}`.
    pub fn exact(a: FieldElem) -> Self {
        ExtNum::new(a, Neutrix::Zero)
    }

    /// The neutrix itself, `0 + N`.
    pub fn from_neutrix(n: Neutrix) -> Self {
        ExtNum::new(FieldElem::zero(), n)
    }

    pub fn zero() -> Self {
        ExtNum::exact(FieldElem::zero())
    }

    pub fn one() -> Self {
        ExtNum::exact(FieldElem::one())
    }

    pub fn precise(&self) -> &FieldElem {
        &self.precise
    }

    pub fn neutrix(&self) -> &Neutrix {
        &self.neutrix
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        self.neutrix.contains(&(x - &self.precise))
    }

    /// `0 ∉ a + A`.
    pub fn is_zeroless(&self) -> bool {
        !self.neutrix.contains(&self.precise)
    }

    /// `a + A = A` as sets.
    pub fn is_neutrix(&self) -> bool {
        !self.is_zeroless()
    }

    /// `N(x) = 0 + A`.
    pub fn neutrix_part(&self) -> ExtNum {
        ExtNum::from_neutrix(self.neutrix.clone())
    }

    pub fn mul_with(&self, other: &ExtNum, rule: BoundaryRule) -> ExtNum {
        let (a, na) = (&self.precise, &self.neutrix);
        let (b, nb) = (&other.precise, &other.neutrix);
        let spread = nb.scale(a).sum(&na.scale(b)).sum(&na.mul_with(nb, rule));
        ExtNum::new(a * b, spread)
    }

    /// Total inverse.
    ///
    /// Zeroless values use `a⁻¹ + a⁻²·A`. Everything else equals its own
    /// neutrix as a set and inverts through the neutrix decomposition.
    pub fn inv(&self) -> ExtNum {
        if self.is_zeroless() {
            let a_inv = self.precise.inv().expect("zeroless precise part is nonzero");
            let spread = self.neutrix.scale(&(&a_inv * &a_inv));
            ExtNum::new(a_inv, spread)
        } else {
            ExtNum::from_neutrix(self.neutrix.inv())
        }
    }

    /// Set inclusion `self ⊆ other`.
    pub fn is_subset(&self, other: &ExtNum) -> bool {
        self.neutrix.is_subset(&other.neutrix)
            && other.neutrix.contains(&(&self.precise - &other.precise))
    }

    /// Set quotient `{x : x·divisor ⊆ self}`.
    ///
    /// For a zeroless divisor `b + B` the candidates are `a/b + A/b`; they
    /// all qualify when `(a/b)·B ⊆ A` and none do otherwise. For a divisor
    /// that is a neutrix `B`, only a neutrix dividend can contain the
    /// products.
    pub fn quotient(&self, divisor: &ExtNum) -> Quotient {
        let alpha = &self.neutrix;
        let beta = &divisor.neutrix;
        if divisor.is_zeroless() {
            let b_inv = divisor
                .precise
                .inv()
                .expect("zeroless precise part is nonzero");
            let centre = &self.precise * &b_inv;
            if beta.scale(&centre).is_subset(alpha) {
                Quotient::Set(ExtNum::new(centre, alpha.scale(&b_inv)))
            } else {
                Quotient::Empty
            }
        } else if beta.is_zero() {
            if self.is_neutrix() {
                Quotient::Set(ExtNum::from_neutrix(Neutrix::Full))
            } else {
                Quotient::Empty
            }
        } else if self.is_zeroless() {
            Quotient::Empty
        } else {
            Quotient::Set(ExtNum::from_neutrix(alpha.quotient(beta)))
        }
    }

    /// Flexible inverse law: for `x ≠ N(x)`, `x·x⁻¹ = 1 + e` where `e` is
    /// a neutrix and `1 + e` is zeroless.
    pub fn satisfies_flexible_inverse(&self) -> bool {
        if !self.is_zeroless() {
            return true;
        }
        let z = self * &self.inv();
        let e = &z.neutrix;
        !e.is_full() && e.contains(&(&z.precise - &FieldElem::one())) && z.is_zeroless()
    }

    /// Representative with the part of `a` already absorbed by the neutrix
    /// removed. Used for display only.
    pub fn canonical_precise(&self) -> FieldElem {
        if self.is_neutrix() {
            return FieldElem::zero();
        }
        match &self.neutrix {
            Neutrix::Zero => self.precise.clone(),
            Neutrix::Full => FieldElem::zero(),
            Neutrix::Cut { at, boundary } => {
                let expanded = self.precise.series_expand(at);
                let kept = expanded.terms().iter().filter(|t| match boundary {
                    Boundary::Closed => &t.exp < at,
                    Boundary::Open => &t.exp <= at,
                });
                FieldElem::from_series(PSeries::from_terms(kept.cloned()))
            }
        }
    }
}

impl PartialEq for ExtNum {
    fn eq(&self, other: &Self) -> bool {
        self.neutrix == other.neutrix && self.neutrix.contains(&(&self.precise - &other.precise))
    }
}

impl Eq for ExtNum {}

impl Add for &ExtNum {
    type Output = ExtNum;
    fn add(self, rhs: &ExtNum) -> ExtNum {
        ExtNum::new(&self.precise + &rhs.precise, self.neutrix.sum(&rhs.neutrix))
    }
}

impl Mul for &ExtNum {
    type Output = ExtNum;
    fn mul(self, rhs: &ExtNum) -> ExtNum {
        self.mul_with(rhs, BoundaryRule::default())
    }
}

impl Neg for &ExtNum {
    type Output = ExtNum;
    fn neg(self) -> ExtNum {
        ExtNum::new(-&self.precise, self.neutrix.clone())
    }
}

impl Add for ExtNum {
    type Output = ExtNum;
    fn add(self, rhs: ExtNum) -> ExtNum {
        &self + &rhs
    }
}

impl Mul for ExtNum {
    type Output = ExtNum;
    fn mul(self, rhs: ExtNum) -> ExtNum {
        &self * &rhs
    }
}

impl Neg for ExtNum {
    type Output = ExtNum;
    fn neg(self) -> ExtNum {
        -&self
    }
}

impl From<FieldElem> for ExtNum {
    fn from(a: FieldElem) -> Self {
        ExtNum::exact(a)
    }
}

impl From<Neutrix> for ExtNum {
    fn from(n: Neutrix) -> Self {
        ExtNum::from_neutrix(n)
    }
}

impl fmt::Display for ExtNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.canonical_precise(), self.neutrix)
    }
}
