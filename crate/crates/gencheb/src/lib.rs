//! Exact symbolic computation around generalized Chebyshev polynomials.
//!
//! The crate provides:
//!
//! * [`poly`] — sparse multivariate Laurent polynomials over arbitrary-precision
//!   integers, with exact division, substitution and rational evaluation;
//! * [`chebyshev`] — generalized Chebyshev polynomials of infinite and finite
//!   rank, constructed by three independent routes, plus the errata machinery
//!   for the published tables;
//! * [`mesh`] — stable translation quivers (ZA-infinity windows, tubes, Möbius
//!   bands), frieze-label propagation and cluster-mesh presentations;
//! * [`typea`] — Caldero-Chapoton characters of the equioriented type-A quiver
//!   and the presentation of the associated cluster algebra;
//! * [`mult`] — the tube / wild multiplication identities and their Hall-product
//!   decompositions;
//! * [`verify`] — deterministic verification suites with JSON reports.
//!
//! All values are immutable after construction and safe to share across
//! threads. With the default `parallel` feature the verification sweeps run on
//! rayon; disabling it leaves a purely sequential build.

pub mod chebyshev;
pub mod error;
pub mod exec;
pub mod mesh;
pub mod mult;
pub mod poly;
pub mod typea;
pub mod verify;

pub use error::Error;
pub use poly::{LaurentPoly, Monomial, Rational, VarFamily, VarId};
