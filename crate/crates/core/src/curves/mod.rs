//! Residues of rational 1-forms on the projective line, divisors and tame
//! symbols of rational functions on cyclic covers of it, the roots of
//! `z^3 + u z + 1`, and torsion detection for symbol values.

mod cubic;
mod function;
mod upoly;


use std::fmt;

use thiserror::Error;

use crate::coeff::{is_root_of_unity, CoeffError, FieldElement};

pub use cubic::{charpoly, discriminant, minpoly_of_power, rational_sqrt, CubicRoots};
pub use function::{order_at, residue, symbol_tuple, tame_symbol, RationalFunction, SymbolTuple};
pub use upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurvesError {
    #[error("the zero function has no divisor")]
    ZeroFunction,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("ramification index must be at least 1")]
    BadRamification,
    #[error("functions live on covers with different ramification")]
    RamificationMismatch,
    #[error("operands belong to different coefficient fields")]
    MixedFields,
    #[error("point {0} listed twice")]
    DuplicatePoint(String),
    #[error("the {0} function has a zero or pole outside the given points")]
    MissingPoint(&'static str),
    #[error("product of tame symbols is {0}, not 1")]
    Reciprocity(String),
    #[error("z^3+u*z+1 has a repeated root at u={0}")]
    RepeatedRoot(String),
    #[error("z^3+u*z+1 at u={0} needs a degree-6 splitting field")]
    NoSmallSplittingField(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// A point of the projective line: an affine coordinate or infinity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointOnLine {
    Affine(FieldElement),
    Infinity,
}

impl PointOnLine {
    pub fn affine(value: impl Into<FieldElement>) -> Self {
        PointOnLine::Affine(value.into())
    }
}

impl fmt::Display for PointOnLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointOnLine::Affine(a) => write!(f, "{a}"),
            PointOnLine::Infinity => f.write_str("inf"),
        }
    }
}

/// Multiplicative order of `x` when it is a root of unity: its minimal
/// polynomial over Q must be cyclotomic.
pub fn torsion_order(x: &FieldElement) -> Option<u64> {
    if x.is_zero() {
        return None;
    }
    is_root_of_unity(&x.minimal_polynomial()).ok().flatten()
}
