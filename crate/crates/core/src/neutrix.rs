//! Neutrices: convex additive subgroups of the field.
//!
//! Over a field whose value group is the rationals, the nontrivial convex
//! subgroups used here are the valuation cuts `{x : v(x) >= q}` and
//! `{x : v(x) > q}` for rational `q`, together with `{0}` and the whole
//! field. They are totally ordered by inclusion, so Minkowski sums reduce to
//! taking the larger operand.

use std::cmp::Ordering;
use std::fmt;

use crate::valcore::{Exp, FieldElem, Valuation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    /// `v(x) > q`
    Open,
    /// `v(x) >= q`
    Closed,
}

impl Boundary {
    pub fn as_str(self) -> &'static str {
        match self {
            Boundary::Open => "open",
            Boundary::Closed => "closed",
        }
    }
}

/// How the boundary flag of a product of two cuts is chosen.
///
/// `BothClosed` is the correct rule for a dense value group. `EitherClosed`
/// is deliberately wrong and only exists for fault-injection runs that make
/// sure the axiom checker is able to notice a broken product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum BoundaryRule {
    #[default]
    BothClosed,
    EitherClosed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Neutrix {
    /// `{0}`
    Zero,
    Cut { at: Exp, boundary: Boundary },
    /// The whole field.
    Full,
}

impl Neutrix {
    pub fn cut(at: Exp, boundary: Boundary) -> Self {
        Neutrix::Cut { at, boundary }
    }

    /// The infinitesimals, `v(x) > 0`.
    pub fn infinitesimal() -> Self {
        Neutrix::cut(Exp::zero(), Boundary::Open)
    }

    /// The limited elements, `v(x) >= 0`.
    pub fn limited() -> Self {
        Neutrix::cut(Exp::zero(), Boundary::Closed)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Neutrix::Zero)
    }

    pub fn is_full(&self) -> bool {
        matches!(self, Neutrix::Full)
    }

    pub fn contains(&self, x: &FieldElem) -> bool {
        match self {
            Neutrix::Zero => x.is_zero(),
            Neutrix::Full => true,
            Neutrix::Cut { at, boundary } => {
                let v = x.valuation();
                let q = Valuation::Finite(at.clone());
                match boundary {
                    Boundary::Closed => v >= q,
                    Boundary::Open => v > q,
                }
            }
        }
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Neutrix) -> bool {
        self <= other
    }

    /// Minkowski sum. For nested groups this is the larger one.
    pub fn sum(&self, other: &Neutrix) -> Neutrix {
        std::cmp::max(self, other).clone()
    }

    /// Minkowski product.
    pub fn mul(&self, other: &Neutrix) -> Neutrix {
        self.mul_with(other, BoundaryRule::default())
    }

    pub fn mul_with(&self, other: &Neutrix, rule: BoundaryRule) -> Neutrix {
        use Neutrix::*;
        match (self, other) {
            (Zero, _) | (_, Zero) => Zero,
            (Full, _) | (_, Full) => Full,
            (
                Cut {
                    at: p,
                    boundary: b1,
                },
                Cut {
                    at: q,
                    boundary: b2,
                },
            ) => {
                let closed = match rule {
                    BoundaryRule::BothClosed => {
                        *b1 == Boundary::Closed && *b2 == Boundary::Closed
                    }
                    BoundaryRule::EitherClosed => {
                        *b1 == Boundary::Closed || *b2 == Boundary::Closed
                    }
                };
                Neutrix::cut(p + q, if closed { Boundary::Closed } else { Boundary::Open })
            }
        }
    }

    /// `a·N = {a y : y ∈ N}`; shifts a cut by `v(a)`.
    pub fn scale(&self, a: &FieldElem) -> Neutrix {
        if a.is_zero() {
            return Neutrix::Zero;
        }
        match self {
            Neutrix::Cut { at, boundary } => {
                let v = a.valuation();
                let shift = v.finite().expect("nonzero element has finite valuation");
                Neutrix::cut(at + shift, *boundary)
            }
            other => other.clone(),
        }
    }

    /// Splits `N` as `r·I` with `I` idempotent.
    ///
    /// The scalar is not unique; the canonical pick is the monomial `e^q`
    /// for a cut at `q`, and `1` for `{0}` and the full field.
    pub fn decompose(&self) -> (FieldElem, Neutrix) {
        match self {
            Neutrix::Cut { at, boundary } => (
                FieldElem::eps_pow(at.clone()),
                Neutrix::cut(Exp::zero(), *boundary),
            ),
            other => (FieldElem::one(), other.clone()),
        }
    }

    /// `I·I = I`. Only `{0}`, the infinitesimals, the limited elements and
    /// the full field qualify.
    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Inverse `r⁻¹·I` where `N = r·I`; independent of the choice of `r`.
    pub fn inv(&self) -> Neutrix {
        let (r, idem) = self.decompose();
        let r_inv = r.inv().expect("decomposition scalar is nonzero");
        idem.scale(&r_inv)
    }

    /// `{x : x·divisor ⊆ self}`.
    pub fn quotient(&self, divisor: &Neutrix) -> Neutrix {
        use Neutrix::*;
        match (self, divisor) {
            (_, Zero) | (Full, _) => Full,
            (_, Full) => Zero,
            (Zero, Cut { .. }) => Zero,
            (
                Cut {
                    at: qa,
                    boundary: ba,
                },
                Cut {
                    at: qb,
                    boundary: bb,
                },
            ) => {
                // v(x) = qa - qb is admissible unless the divisor reaches
                // its cut point while the dividend excludes it.
                let open = *bb == Boundary::Closed && *ba == Boundary::Open;
                Neutrix::cut(qa - qb, if open { Boundary::Open } else { Boundary::Closed })
            }
        }
    }
}

impl PartialOrd for Neutrix {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Inclusion order. Neutrices of this field form a chain, so the order is
/// total.
impl Ord for Neutrix {
    fn cmp(&self, other: &Self) -> Ordering {
        use Neutrix::*;
        match (self, other) {
            (Zero, Zero) | (Full, Full) => Ordering::Equal,
            (Zero, _) | (_, Full) => Ordering::Less,
            (_, Zero) | (Full, _) => Ordering::Greater,
            (
                Cut {
                    at: p,
                    boundary: b1,
                },
                Cut {
                    at: q,
                    boundary: b2,
                },
            ) => q.cmp(p).then_with(|| match (b1, b2) {
                (Boundary::Open, Boundary::Closed) => Ordering::Less,
                (Boundary::Closed, Boundary::Open) => Ordering::Greater,
                _ => Ordering::Equal,
            }),
        }
    }
}

impl fmt::Display for Neutrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Neutrix::Zero => f.write_str("zero"),
            Neutrix::Full => f.write_str("full"),
            Neutrix::Cut { at, boundary } if at.is_zero() => match boundary {
                Boundary::Open => f.write_str("o"),
                Boundary::Closed => f.write_str("L"),
            },
            Neutrix::Cut { at, boundary } => write!(f, "cut({},{})", at, boundary.as_str()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cut(n: i64, d: i64, b: Boundary) -> Neutrix {
        Neutrix::cut(Exp::ratio(n, d), b)
    }

    fn eps() -> FieldElem {
        FieldElem::epsilon()
    }

    #[test]
    fn membership() {
        let o = Neutrix::infinitesimal();
        let l = Neutrix::limited();
        assert!(o.contains(&eps()));
        assert!(!o.contains(&FieldElem::one()));
        assert!(l.contains(&(&FieldElem::one() + &eps())));
        assert!(!l.contains(&eps().inv().unwrap()));
        assert!(Neutrix::Zero.contains(&FieldElem::zero()));
        assert!(!Neutrix::Zero.contains(&eps()));
        for n in [Neutrix::Zero, o.clone(), l.clone(), Neutrix::Full] {
            assert!(n.contains(&FieldElem::zero()));
        }
    }

    #[test]
    fn inclusion_chain() {
        let o = Neutrix::infinitesimal();
        let l = Neutrix::limited();
        assert!(Neutrix::Zero < cut(5, 1, Boundary::Open));
        assert!(o < l);
        assert!(cut(1, 1, Boundary::Closed) < o);
        assert!(l < cut(-1, 2, Boundary::Open));
        assert!(cut(-9, 1, Boundary::Closed) < Neutrix::Full);
        assert!(o.is_subset(&l) && !l.is_subset(&o));
    }

    #[test]
    fn sums() {
        let o = Neutrix::infinitesimal();
        let l = Neutrix::limited();
        assert_eq!(o.sum(&l), l);
        assert_eq!(o.sum(&Neutrix::Zero), o);
        assert_eq!(l.sum(&l), l);
        assert_eq!(l.sum(&Neutrix::Full), Neutrix::Full);
    }

    #[test]
    fn products() {
        let o = Neutrix::infinitesimal();
        let l = Neutrix::limited();
        assert_eq!(o.mul(&o), o);
        assert_eq!(l.mul(&l), l);
        assert_eq!(o.mul(&l), o);
        assert_eq!(Neutrix::Full.mul(&Neutrix::Zero), Neutrix::Zero);
        assert_eq!(Neutrix::Full.mul(&o), Neutrix::Full);
        assert_eq!(
            cut(1, 2, Boundary::Closed).mul(&cut(1, 3, Boundary::Closed)),
            cut(5, 6, Boundary::Closed)
        );
        assert_eq!(
            o.mul_with(&l, BoundaryRule::EitherClosed),
            l,
            "the faulty rule closes mixed products"
        );
    }

    #[test]
    fn absorption() {
        let l = Neutrix::limited();
        assert_eq!(l.scale(&eps()), cut(1, 1, Boundary::Closed));
        let a = cut(-2, 3, Boundary::Open);
        assert_eq!(a.scale(&FieldElem::from_i64(2)), a);
        assert_eq!(Neutrix::Full.scale(&FieldElem::zero()), Neutrix::Zero);
        assert_eq!(Neutrix::Zero.scale(&eps()), Neutrix::Zero);
        assert_eq!(Neutrix::Full.scale(&eps()), Neutrix::Full);
    }

    #[test]
    fn decomposition() {
        let el = cut(1, 1, Boundary::Closed);
        let (r, i) = el.decompose();
        assert_eq!(r, eps());
        assert_eq!(i, Neutrix::limited());
        let (r, i) = Neutrix::infinitesimal().decompose();
        assert_eq!(r, FieldElem::one());
        assert_eq!(i, Neutrix::infinitesimal());
        let n = cut(-3, 2, Boundary::Open);
        let (r, i) = n.decompose();
        assert_eq!(r, FieldElem::eps_pow(Exp::ratio(-3, 2)));
        assert_eq!(i, Neutrix::infinitesimal());
        assert_eq!(i.scale(&r), n);
        assert_eq!(Neutrix::Zero.decompose(), (FieldElem::one(), Neutrix::Zero));
    }

    #[test]
    fn idempotents() {
        assert!(Neutrix::limited().is_idempotent());
        assert!(Neutrix::infinitesimal().is_idempotent());
        assert!(Neutrix::Zero.is_idempotent());
        assert!(Neutrix::Full.is_idempotent());
        assert!(!cut(1, 1, Boundary::Closed).is_idempotent());
        assert!(!cut(-1, 2, Boundary::Open).is_idempotent());
    }

    #[test]
    fn inverses() {
        assert_eq!(Neutrix::infinitesimal().inv(), Neutrix::infinitesimal());
        assert_eq!(cut(1, 1, Boundary::Closed).inv(), cut(-1, 1, Boundary::Closed));
        assert_eq!(Neutrix::Zero.inv(), Neutrix::Zero);
        assert_eq!(Neutrix::Full.inv(), Neutrix::Full);
    }

    #[test]
    fn quotients() {
        let o = Neutrix::infinitesimal();
        let l = Neutrix::limited();
        assert_eq!(o.quotient(&o), l);
        assert_eq!(l.quotient(&l), l);
        assert_eq!(o.quotient(&l), o);
        assert_eq!(l.quotient(&o), l);
        assert_eq!(Neutrix::Zero.quotient(&o), Neutrix::Zero);
        assert_eq!(o.quotient(&Neutrix::Zero), Neutrix::Full);
        assert_eq!(o.quotient(&Neutrix::Full), Neutrix::Zero);
        assert_eq!(Neutrix::Full.quotient(&Neutrix::Full), Neutrix::Full);
    }

    #[test]
    fn display() {
        assert_eq!(Neutrix::infinitesimal().to_string(), "o");
        assert_eq!(Neutrix::limited().to_string(), "L");
        assert_eq!(cut(-3, 2, Boundary::Open).to_string(), "cut(-3/2,open)");
        assert_eq!(Neutrix::Zero.to_string(), "zero");
    }
}
