//! Sparse multivariate Laurent polynomials over arbitrary-precision integers.
//!
//! The canonical term order is graded-lexicographic over the fixed [`VarId`]
//! order, so equality, hashing and serialization are deterministic.

mod laurent;
mod monomial;
mod parse;
mod rational;
mod serial;
mod var;

pub use laurent::LaurentPoly;
pub use monomial::Monomial;
pub use parse::parse_poly;
pub use rational::{parse_rational, rational_to_string, Rational};
pub use serial::{poly_from_json, poly_to_json, poly_to_tsv};
pub use var::{VarFamily, VarId};
