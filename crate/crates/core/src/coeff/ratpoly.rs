//! Dense univariate polynomials over the rationals, coefficients stored
//! lowest degree first. Used for minimal polynomials, extension arithmetic
//! and cyclotomic tests.

use super::Rational;

pub type RatPoly = Vec<Rational>;

/// Drops trailing zero coefficients. The zero polynomial is the empty vector.
pub fn trim(p: &mut RatPoly) {
    while p.last().is_some_and(Rational::is_zero) {
        p.pop();
    }
}

pub fn trimmed(mut p: RatPoly) -> RatPoly {
    trim(&mut p);
    p
}

pub fn from_ints(coeffs: &[i64]) -> RatPoly {
    trimmed(coeffs.iter().map(|&c| Rational::from(c)).collect())
}

/// Degree of `p`, `None` for the zero polynomial.
pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn is_monic(p: &[Rational]) -> bool {
    degree(p).is_some_and(|d| p[d].is_one())
}

pub fn add(a: &[Rational], b: &[Rational]) -> RatPoly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(match b.get(i) {
            Some(y) => x + y,
            None => x,
        });
    }
    trimmed(out)
}

pub fn sub(a: &[Rational], b: &[Rational]) -> RatPoly {
    let neg: RatPoly = b.iter().map(|c| -c).collect();
    add(a, &neg)
}

pub fn mul(a: &[Rational], b: &[Rational]) -> RatPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trimmed(out)
}

pub fn scale(a: &[Rational], c: &Rational) -> RatPoly {
    trimmed(a.iter().map(|x| x * c).collect())
}

/// Euclidean division `a = q * b + r` with `deg r < deg b`.
///
/// Panics if `b` is zero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (RatPoly, RatPoly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut r = trimmed(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &lead_inv;
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate().take(db + 1) {
            let t = &c * bj;
            r[shift + j] -= &t;
        }
        q[shift] = c;
        trim(&mut r);
    }
    (trimmed(q), r)
}

pub fn rem(a: &[Rational], b: &[Rational]) -> RatPoly {
    divrem(a, b).1
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

pub fn make_monic(p: &[Rational]) -> RatPoly {
    match degree(p) {
        None => Vec::new(),
        Some(d) => {
            let inv = p[d].inv().expect("nonzero leading coefficient");
            scale(p, &inv)
        }
    }
}

/// Extended Euclid: returns `(g, s, t)` with `g = s*a + t*b`, `g` monic.
pub fn ext_gcd(a: &[Rational], b: &[Rational]) -> (RatPoly, RatPoly, RatPoly) {
    let (mut r0, mut r1) = (trimmed(a.to_vec()), trimmed(b.to_vec()));
    let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        let t2 = sub(&t0, &mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    match degree(&r0) {
        None => (Vec::new(), s0, t0),
        Some(d) => {
            let inv = r0[d].inv().unwrap();
            (scale(&r0, &inv), scale(&s0, &inv), scale(&t0, &inv))
        }
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> RatPoly {
    ext_gcd(a, b).0
}

/// Candidate rational roots by the rational root theorem.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    use num_bigint::BigInt;
    use num_traits::{One, Signed, Zero};

    let Some(d) = degree(p) else {
        return Vec::new();
    };
    let lcm = Rational::denom_lcm(p.iter());
    let ints: Vec<BigInt> = p
        .iter()
        .map(|c| (c * &Rational::from_integer(lcm.clone())).numer().clone())
        .collect();
    let mut roots = Vec::new();
    // strip factors of z
    let low = ints.iter().position(|c| !c.is_zero()).unwrap_or(0);
    if low > 0 {
        roots.push(Rational::zero());
    }
    let a0 = ints[low].abs();
    let an = ints[d].abs();
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let mut k = BigInt::one();
        while &k * &k <= *n {
            if (n % &k).is_zero() {
                out.push(k.clone());
                let other = n / &k;
                if other != k {
                    out.push(other);
                }
            }
            k += 1;
        }
        out
    };
    for num in divisors(&a0) {
        for den in divisors(&an) {
            for sign in [1i64, -1] {
                let cand = Rational::new(&num * sign, den.clone());
                if eval(p, &cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let a = from_ints(&[1, 0, 0, 0, 0, 1]); // z^5 + 1
        let b = from_ints(&[1, 1, 1]); // z^2 + z + 1
        let (q, r) = divrem(&a, &b);
        assert_eq!(add(&mul(&q, &b), &r), a);
        assert!(degree(&r).is_none_or(|d| d < 2));
    }

    #[test]
    fn gcd_of_coprime_and_shared() {
        let a = from_ints(&[-1, 0, 1]); // z^2 - 1
        let b = from_ints(&[1, 1]); // z + 1
        assert_eq!(gcd(&a, &b), from_ints(&[1, 1]));
        let c = from_ints(&[2, 1]);
        assert_eq!(gcd(&a, &c), from_ints(&[1]));
    }

    #[test]
    fn finds_rational_roots() {
        // 2z^2 - 3z + 1 = (2z - 1)(z - 1)
        let p = from_ints(&[1, -3, 2]);
        assert_eq!(
            rational_roots(&p),
            vec![Rational::new(1, 2), Rational::one()]
        );
        assert!(rational_roots(&from_ints(&[1, 1, 1])).is_empty());
    }
}
