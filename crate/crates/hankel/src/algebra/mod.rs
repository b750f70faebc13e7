//! Exact coefficient arithmetic, monomials, polynomials, monomial orders,
//! ring descriptors, and determinants of polynomial matrices.

pub mod coeff;
pub mod matrix;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod ring;

pub use coeff::{Coeff, FieldTag};
pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use poly::{parse_polynomial, Polynomial};
pub use ring::Ring;
