//! Exact computational algebra for Hankel determinantal rings.
//!
//! The crate builds the rings cut out by minors of Hankel matrices of
//! indeterminates and mechanically checks their structure at desk scale:
//! ring invariants, symbolic-power identities, divisor class groups,
//! F-purity, and F-pure thresholds. Everything is exact: coefficients are
//! arbitrary-precision rationals or prime-field elements, and every claim is
//! decided through Groebner bases, graded linear algebra, or combinatorics,
//! never floating point.
//!
//! Layers, bottom up:
//!
//! * [`algebra`] — coefficients, monomials, orders, polynomials, and
//!   determinants of polynomial matrices.
//! * [`groebner`] — Buchberger engine, ideal arithmetic (quotients,
//!   saturation, elimination, Frobenius powers), dimension and length.
//! * [`rings`] — the Hankel constructions: contexts, the `p<k>` family,
//!   secant parametrizations, and structural identity checks.
//! * [`divisor`] — reflexive hulls, divisor class arithmetic, symbolic-power
//!   certificates, canonical modules.
//! * [`frobenius`] — Fedder's criterion, nu_e counts, F-pure thresholds.
//! * [`verify`] — named verification suites producing JSON reports, used by
//!   the `hankel` binary and the acceptance tests.

pub mod algebra;
pub mod divisor;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
