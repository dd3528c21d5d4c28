//! Neutrices, external numbers and flexible involutive meadows.
//!
//! The crate is organised bottom-up:
//!
//! - [`valcore`]: exact arithmetic in a non-archimedean ordered field built
//!   from finite generalized power series in a positive infinitesimal `e`.
//! - [`neutrix`]: convex additive subgroups of that field (valuation cuts),
//!   their Minkowski algebra, idempotent decomposition and inverse.
//! - [`external`]: external numbers `a + A` with Minkowski arithmetic, the
//!   total inverse, set quotients and the flexible inverse law.
//! - [`literal`]: text syntax for the three value types above.
//! - [`carrier`]: a uniform model interface with the external numbers and
//!   several finite and rational meadow models behind it.
//! - [`axioms`]: a term language, axiom catalogs and a deterministic
//!   checker that reports passes or counterexamples.

pub mod axioms;
pub mod carrier;
pub mod external;
pub mod literal;
pub mod neutrix;
pub mod valcore;

pub use external::{ExtNum, Quotient};
pub use neutrix::{Boundary, BoundaryRule, Neutrix};
pub use valcore::{Exp, FieldElem, PSeries, Rational, Valuation};
