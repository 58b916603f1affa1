//! Elimination and intersection of ideals.

use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingContext};

use super::{buchberger, ideal_member, GroebnerError, Ideal};

/// Name of the auxiliary variable used by [`intersect`]; it cannot clash
/// with user identifiers.
const AUX_VAR: &str = "@t";

/// Drops the first `k` variables of a polynomial free of them.
fn drop_leading_vars(p: &Polynomial, k: usize, target: &Ring) -> Polynomial {
    let terms = p
        .terms()
        .iter()
        .map(|(m, c)| {
            debug_assert!(m.exponents()[..k].iter().all(|&e| e == 0));
            (Monomial::new(&m.exponents()[k..]), c.clone())
        })
        .collect();
    Polynomial::from_unsorted(target, terms)
}

fn is_free_of_first(p: &Polynomial, k: usize) -> bool {
    p.terms()
        .iter()
        .all(|(m, _)| m.exponents()[..k].iter().all(|&e| e == 0))
}

/// `I ∩ Q[x_{k+1}, …, x_n]`, returned over the ring of the remaining
/// variables with grevlex order. `k = 0` returns the reduced basis of `I`.
pub fn eliminate(ideal: &Ideal, k: usize) -> Ideal {
    let ring = ideal.ring();
    if k == 0 {
        return Ideal::from_reduced_basis(ring, ideal.groebner_basis().to_vec());
    }
    let n = ring.nvars();
    assert!(k <= n, "cannot eliminate {k} of {n} variables");
    let block = MonomialOrder::Block(k);
    let basis = if ring.order() == block {
        ideal.groebner_basis().to_vec()
    } else {
        let elim_ring = ring.with_order(block);
        let gens: Vec<Polynomial> = ideal
            .generators()
            .iter()
            .map(|g| g.with_ring(&elim_ring))
            .collect();
        buchberger(&gens)
    };
    let sub = RingContext::new(
        ring.variables()[k..].iter().cloned(),
        MonomialOrder::Grevlex,
        ring.field().clone(),
    )
    .expect("subset of distinct names");
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| is_free_of_first(g, k))
        .map(|g| drop_leading_vars(g, k, &sub))
        .collect();
    // a subset of a reduced basis, and the block order restricts to grevlex
    Ideal::from_reduced_basis(&sub, kept)
}

/// `I ∩ J` via `t·I + (1 - t)·J` and elimination of `t`. Every returned
/// generator is checked to lie in both ideals.
pub fn intersect(i: &Ideal, j: &Ideal) -> Result<Ideal, GroebnerError> {
    let ring = i.ring();
    if !crate::poly::same_ring(ring, j.ring()) {
        return Err(GroebnerError::MixedRings);
    }
    let mut names = vec![AUX_VAR.to_string()];
    names.extend(ring.variables().iter().cloned());
    let big = RingContext::new(names, MonomialOrder::Block(1), ring.field().clone())?;
    let positions: Vec<usize> = (1..=ring.nvars()).collect();
    let t = Polynomial::var_at(&big, 0);
    let one_minus_t = &Polynomial::one(&big) - &t;

    let mut gens = Vec::new();
    for g in i.generators() {
        gens.push(&t * &g.embed(&big, &positions));
    }
    for g in j.generators() {
        gens.push(&one_minus_t * &g.embed(&big, &positions));
    }
    let basis = buchberger(&gens);
    let kept: Vec<Polynomial> = basis
        .iter()
        .filter(|g| is_free_of_first(g, 1))
        .map(|g| drop_leading_vars(g, 1, ring))
        .collect();

    let result = if ring.order() == MonomialOrder::Grevlex {
        Ideal::from_reduced_basis(ring, kept)
    } else {
        Ideal::new(ring, kept)?
    };
    for g in result.generators() {
        if !ideal_member(g, i) || !ideal_member(g, j) {
            return Err(GroebnerError::IntersectionCheckFailed(g.render()));
        }
    }
    Ok(result)
}
