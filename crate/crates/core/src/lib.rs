//! Exact computer algebra for Jacobian rings, residues and tame symbols.
//!
//! The crate is layered bottom-up: [`coeff`] (rational and algebraic
//! scalars), [`poly`] (sparse multivariate polynomials), [`groebner`]
//! (Buchberger, elimination, intersection), [`rings`] (graded quotients and
//! exact linear algebra), [`curves`] (residues and tame symbols on the
//! projective line) and [`dsl`] (a small SINGULAR-style script interpreter).

pub mod coeff;
pub mod curves;
pub mod dsl;
pub mod groebner;
pub mod poly;
pub mod rings;
