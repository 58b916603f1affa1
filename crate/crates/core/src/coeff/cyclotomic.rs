//! Cyclotomic polynomials and root-of-unity detection.

use super::ratpoly::{self, RatPoly};
use super::{CoeffError, Rational};

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// The `n`-th cyclotomic polynomial, built by dividing `z^n - 1` by
/// `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(n: u64) -> RatPoly {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut p: RatPoly = vec![Rational::zero(); n as usize + 1];
    p[0] = Rational::from(-1);
    p[n as usize] = Rational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, r) = ratpoly::divrem(&p, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            p = q;
        }
    }
    p
}

/// All `n` with `φ(n) = deg`. Uses `φ(n) >= sqrt(n/2)`, so `n <= 2 deg^2`.
pub fn indices_with_phi(deg: u64) -> Vec<u64> {
    let bound = (2 * deg * deg).max(2);
    (1..=bound).filter(|&n| euler_phi(n) == deg).collect()
}

/// Returns `Some(n)` when `minpoly` is exactly the `n`-th cyclotomic
/// polynomial, i.e. its roots are primitive `n`-th roots of unity.
pub fn is_root_of_unity(minpoly: &[Rational]) -> Result<Option<u64>, CoeffError> {
    if !ratpoly::is_monic(minpoly) {
        return Err(CoeffError::NotMonic);
    }
    let deg = ratpoly::degree(minpoly).unwrap() as u64;
    let p = ratpoly::trimmed(minpoly.to_vec());
    Ok(indices_with_phi(deg)
        .into_iter()
        .find(|&n| cyclotomic_polynomial(n) == p))
}

/// Smallest `n` such that `Φ_n` divides `p`, if any. A polynomial without
/// cyclotomic factors has no root of unity among its roots.
pub fn cyclotomic_factor(p: &[Rational]) -> Option<u64> {
    let deg = ratpoly::degree(p)? as u64;
    (1..=deg)
        .flat_map(indices_with_phi)
        .filter(|&n| ratpoly::rem(p, &cyclotomic_polynomial(n)).is_empty())
        .min()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), ratpoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(3), ratpoly::from_ints(&[1, 1, 1]));
        assert_eq!(cyclotomic_polynomial(6), ratpoly::from_ints(&[1, -1, 1]));
        assert_eq!(
            cyclotomic_polynomial(12),
            ratpoly::from_ints(&[1, 0, -1, 0, 1])
        );
    }

    #[test]
    fn detects_orders() {
        assert_eq!(
            is_root_of_unity(&ratpoly::from_ints(&[1, 1, 1])).unwrap(),
            Some(3)
        );
        assert_eq!(
            is_root_of_unity(&ratpoly::from_ints(&[1, -1, 1])).unwrap(),
            Some(6)
        );
        assert_eq!(
            is_root_of_unity(&ratpoly::from_ints(&[-2, 0, 1])).unwrap(),
            None
        );
        assert!(is_root_of_unity(&ratpoly::from_ints(&[1, 2])).is_err());
    }

    #[test]
    fn every_small_cyclotomic_is_recognised() {
        for n in 1..=60u64 {
            if euler_phi(n) <= 4 {
                let phi = cyclotomic_polynomial(n);
                assert_eq!(is_root_of_unity(&phi).unwrap(), Some(n), "n = {n}");
            }
        }
    }

    #[test]
    fn phi_index_search_is_complete() {
        // brute force well past the bound
        for deg in 1..=4u64 {
            let brute: Vec<u64> = (1..=500).filter(|&n| euler_phi(n) == deg).collect();
            assert_eq!(indices_with_phi(deg), brute);
        }
    }

    #[test]
    fn cyclotomic_factor_search() {
        // z^3 + 1 = (z + 1)(z^2 - z + 1)
        assert_eq!(
            cyclotomic_factor(&ratpoly::from_ints(&[1, 0, 0, 1])),
            Some(2)
        );
        assert_eq!(cyclotomic_factor(&ratpoly::from_ints(&[1, 1, 0, 1])), None);
    }
}
