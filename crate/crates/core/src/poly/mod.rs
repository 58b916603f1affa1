//! Sparse multivariate polynomials over an exact coefficient field.

mod monomial;
mod parse;
mod polynomial;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::coeff::{CoeffError, Field};

pub use monomial::{compare_monomials, Exponents, Monomial, MonomialOrder};
pub use polynomial::{Binding, Polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomials belong to different rings")]
    MixedRings,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
}

/// Variables (greatest first), monomial order and coefficient field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RingContext {
    variables: Vec<String>,
    order: MonomialOrder,
    field: Field,
}

/// Shared handle to a ring; polynomials carry one.
pub type Ring = Arc<RingContext>;

impl RingContext {
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = S>,
        order: MonomialOrder,
        field: Field,
    ) -> Result<Ring, PolyError> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(RingContext {
            variables,
            order,
            field,
        }))
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn var_index(&self, name: &str) -> Result<usize, PolyError> {
        self.variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Same variables and field with a different order.
    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Arc::new(RingContext {
            variables: self.variables.clone(),
            order,
            field: self.field.clone(),
        })
    }
}

impl fmt::Debug for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:?}[{}] {:?}",
            self.field,
            self.variables.join(","),
            self.order
        )
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// All monomials of total degree `d`, in descending monomial order.
pub fn graded_piece_basis(ring: &RingContext, d: u64) -> Vec<Monomial> {
    let n = ring.nvars();
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps: Exponents = smallvec::smallvec![0; n];
    fn rec(i: usize, left: u64, exps: &mut Exponents, out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left as u32;
            out.push(Monomial::new(exps.clone()));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e as u32;
            rec(i + 1, left - e, exps, out);
        }
    }
    rec(0, d, &mut exps, &mut out);
    let order = ring.order();
    out.sort_by(|a, b| order.cmp(b, a));
    out
}

/// `C(d + n - 1, n - 1)`: number of monomials of degree `d` in `n` variables.
pub fn monomial_count(nvars: usize, d: u64) -> u64 {
    if nvars == 0 {
        return u64::from(d == 0);
    }
    let k = (nvars - 1) as u64;
    let mut acc: u64 = 1;
    for i in 1..=k {
        acc = acc * (d + i) / i;
    }
    acc
}
