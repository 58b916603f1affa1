//! Gröbner bases and the ideal operations built on them.

mod buchberger;
mod elim;
mod reduce;
mod zpoly;

use std::sync::OnceLock;

use thiserror::Error;

use crate::poly::{PolyError, Polynomial, Ring};

use zpoly::Prepared;

pub use buchberger::{buchberger, is_groebner_basis, is_reduced, minimal_generators, reduce_basis};
pub use elim::{eliminate, intersect};
pub use reduce::{normal_form, s_polynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("generators belong to different rings")]
    MixedRings,
    #[error("intersection generator {0} is not contained in both ideals")]
    IntersectionCheckFailed(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// An ideal given by generators, with a lazily computed reduced Gröbner
/// basis. The cache is filled at most once, even under concurrent access.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
    prepared: OnceLock<Prepared>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        for g in &generators {
            if !crate::poly::same_ring(g.ring(), ring) {
                return Err(GroebnerError::MixedRings);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
            prepared: OnceLock::new(),
        })
    }

    /// Wraps an already reduced Gröbner basis.
    pub(crate) fn from_reduced_basis(ring: &Ring, basis: Vec<Polynomial>) -> Self {
        let gb = OnceLock::new();
        let _ = gb.set(basis.clone());
        Ideal {
            ring: ring.clone(),
            generators: basis,
            gb,
            prepared: OnceLock::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn groebner_basis(&self) -> &[Polynomial] {
        self.gb.get_or_init(|| buchberger(&self.generators))
    }

    fn prepared(&self) -> &Prepared {
        self.prepared
            .get_or_init(|| Prepared::new(&self.ring, self.groebner_basis()))
    }

    /// Normal form modulo the reduced basis.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        self.prepared().normal_form(f)
    }

    pub fn has_cached_basis(&self) -> bool {
        self.gb.get().is_some()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        ideal_member(f, self)
    }

    /// Every generator homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(|g| g.is_homogeneous().is_some())
    }

    /// Largest generator degree (0 for the zero ideal).
    pub fn max_generator_degree(&self) -> u64 {
        self.generators
            .iter()
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(0)
    }

    pub fn krull_dim(&self) -> i64 {
        krull_dim(self)
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            gb,
            prepared: OnceLock::new(),
        }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.generators).finish()
    }
}

/// `f ∈ I` iff its normal form modulo the reduced basis vanishes.
pub fn ideal_member(f: &Polynomial, ideal: &Ideal) -> bool {
    ideal.prepared().reduces_to_zero(f)
}

/// Affine Krull dimension of `B/I`: the size of a largest set of variables
/// such that no leading monomial of the basis is supported inside it.
/// The unit ideal reports `-1`.
pub fn krull_dim(ideal: &Ideal) -> i64 {
    let n = ideal.ring().nvars();
    let supports: Vec<u64> = ideal
        .groebner_basis()
        .iter()
        .map(|g| {
            g.leading_monomial()
                .unwrap()
                .support()
                .fold(0u64, |acc, i| acc | (1 << i))
        })
        .collect();
    if supports.contains(&0) {
        return -1;
    }
    assert!(n < 64, "too many variables for subset enumeration");
    let mut best = 0;
    for subset in 0u64..(1u64 << n) {
        let size = subset.count_ones() as i64;
        if size <= best {
            continue;
        }
        if supports.iter().all(|&s| s & !subset != 0) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests;
