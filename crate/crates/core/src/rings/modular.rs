//! Exact rank of a set of polynomials by elimination modulo many primes.
//!
//! Reducing modulo a prime never raises the rank. Over `Q[α]/(m)` the
//! reduction sends `α` to a root of `m` mod `p`; a minor that vanishes there
//! has norm divisible by `p`. Once the primes multiply past the Hadamard
//! bound on the norm of every minor, the largest modular rank is the rank
//! over the field.

use std::collections::HashMap;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use primal_check::miller_rabin;

use crate::coeff::{Field, FieldElement, Rational};
use crate::poly::{Monomial, Polynomial};

use super::Echelon;

/// Largest modulus tried; products of two residues fit in `u128`.
const TOP_PRIME: u64 = 1 << 62;
/// Splitting attempts per prime before the prime is skipped.
const SPLIT_TRIES: u64 = 64;

/// Rank of `rows` as vectors over their coefficient field. Extensions whose
/// minimal polynomial is not integral fall back to exact elimination.
pub fn exact_rank(field: &Field, rows: &[Polynomial]) -> usize {
    let Ok(minpoly) = integral_minpoly(field) else {
        let Some(first) = rows.first() else { return 0 };
        let mut e = Echelon::new(first.ring());
        rows.iter().for_each(|r| {
            e.insert(r);
        });
        return e.rank();
    };
    let (columns, integral) = integral_rows(field, rows);
    if integral.is_empty() {
        return 0;
    }
    let ncols = columns.len();
    let most = integral.len().min(ncols);
    let degree = minpoly.as_ref().map_or(1, |m| m.len() - 1);
    let needed = norm_bound_bits(&integral, minpoly.as_deref(), most) + 1.0;

    let mut best = 0;
    let mut covered = 0.0;
    let mut p = TOP_PRIME;
    while covered < needed {
        p = previous_prime(p);
        let root = match &minpoly {
            None => 0,
            Some(m) => match root_mod(m, p) {
                Some(r) => r,
                None => continue,
            },
        };
        best = best.max(rank_mod(&integral, ncols, degree, root, p));
        if best == most {
            break;
        }
        covered += (p as f64).log2();
    }
    best
}

/// Integer entries per row: `(column, coefficients in the generator)`.
type IntRow = Vec<(usize, Vec<BigInt>)>;

/// Scales every row by the common denominator of its coefficients.
fn integral_rows(field: &Field, rows: &[Polynomial]) -> (HashMap<Monomial, usize>, Vec<IntRow>) {
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    let mut out = Vec::new();
    for row in rows.iter().filter(|r| !r.is_zero()) {
        let coords: Vec<Vec<Rational>> = row
            .terms()
            .iter()
            .map(|(_, c)| coordinates(field, c))
            .collect();
        let lcm = Rational::denom_lcm(coords.iter().flatten());
        let scaled = row
            .terms()
            .iter()
            .zip(&coords)
            .map(|((m, _), cs)| {
                let next = columns.len();
                let col = *columns.entry(m.clone()).or_insert(next);
                let ints = cs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
                (col, ints)
            })
            .collect();
        out.push(scaled);
    }
    (columns, out)
}

fn coordinates(field: &Field, c: &FieldElement) -> Vec<Rational> {
    match c {
        FieldElement::Rational(q) => {
            let mut v = vec![Rational::zero(); field.degree()];
            v[0] = q.clone();
            v
        }
        FieldElement::Ext(e) => e.coeffs().to_vec(),
    }
}

/// The defining polynomial with integer coefficients, lowest degree first;
/// `None` over Q, an error when some coefficient is not an integer.
fn integral_minpoly(field: &Field) -> Result<Option<Vec<BigInt>>, ()> {
    let Field::Ext(ext) = field else {
        return Ok(None);
    };
    let m = ext.minpoly();
    if !m.iter().all(Rational::is_integer) {
        return Err(());
    }
    Ok(Some(m.iter().map(|c| c.numer().clone()).collect()))
}

fn bits(x: &BigInt) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let b = x.bits();
    // top 53 bits in f64, then the shift
    let shift = b.saturating_sub(53);
    let top = (x.abs() >> shift).to_f64().unwrap_or(f64::MAX);
    top.log2() + shift as f64
}

/// log2 of a bound on `|N(M)|` for every `most x most` minor `M`.
fn norm_bound_bits(rows: &[IntRow], minpoly: Option<&[BigInt]>, most: usize) -> f64 {
    // Cauchy bound on the absolute value of any root of the minpoly
    let (degree, root_bits) = match minpoly {
        None => (1usize, 0.0),
        Some(m) => {
            let big = m[..m.len() - 1]
                .iter()
                .map(|c| c.abs())
                .max()
                .unwrap_or_default();
            (m.len() - 1, bits(&(big + BigInt::one())))
        }
    };
    let mut row_bits: Vec<f64> = rows
        .iter()
        .map(|row| {
            let entry = row
                .iter()
                .map(|(_, cs)| {
                    let top = cs
                        .iter()
                        .enumerate()
                        .map(|(i, c)| bits(c) + i as f64 * root_bits)
                        .fold(0.0, f64::max);
                    top + (cs.len() as f64).log2()
                })
                .fold(0.0, f64::max);
            entry + 0.5 * (row.len() as f64).log2()
        })
        .collect();
    row_bits.sort_by(|a, b| b.total_cmp(a));
    degree as f64 * row_bits.iter().take(most).sum::<f64>()
}

fn previous_prime(mut n: u64) -> u64 {
    loop {
        n -= 1;
        if miller_rabin(n) {
            return n;
        }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn reduce_int(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    match r.to_u64_digits() {
        (Sign::NoSign, _) => 0,
        (_, digits) => digits[0],
    }
}

/// Rank modulo `p` with the generator sent to `root`.
fn rank_mod(rows: &[IntRow], ncols: usize, degree: usize, root: u64, p: u64) -> usize {
    let powers: Vec<u64> = (0..degree).map(|i| powmod(root, i as u64, p)).collect();
    let mut pivots: Vec<Option<Vec<(usize, u64)>>> = vec![None; ncols];
    let mut acc = vec![0u64; ncols];
    let mut rank = 0;
    for row in rows {
        let mut first = ncols;
        for (col, cs) in row {
            let v = cs
                .iter()
                .zip(&powers)
                .fold(0, |s, (c, w)| (s + mulmod(reduce_int(c, p), *w, p)) % p);
            acc[*col] = v;
            if v != 0 {
                first = first.min(*col);
            }
        }
        let mut col = first;
        while col < ncols {
            let c = acc[col];
            if c == 0 {
                col += 1;
                continue;
            }
            match &pivots[col] {
                Some(pivot) => {
                    for &(j, v) in pivot {
                        acc[j] = (acc[j] + p - mulmod(c, v, p)) % p;
                    }
                    col += 1;
                }
                None => break,
            }
        }
        if col < ncols {
            let scale = inv_mod(acc[col], p);
            let new: Vec<(usize, u64)> = (col..ncols)
                .filter(|&j| acc[j] != 0)
                .map(|j| (j, mulmod(acc[j], scale, p)))
                .collect();
            pivots[col] = Some(new);
            rank += 1;
        }
        acc.iter_mut().for_each(|x| *x = 0);
    }
    rank
}

/// Polynomials mod `p`, lowest degree first, without trailing zeros.
type PolyP = Vec<u64>;

fn trim(mut a: PolyP) -> PolyP {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_rem(a: &[u64], m: &[u64], p: u64) -> PolyP {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let top = r.len() - 1;
        let c = mulmod(r[top], lead_inv, p);
        for (i, &mi) in m.iter().enumerate() {
            let k = top - dm + i;
            r[k] = (r[k] + p - mulmod(c, mi, p)) % p;
        }
        r = trim(r);
    }
    r
}

fn poly_mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> PolyP {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    poly_rem(&out, m, p)
}

fn poly_powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> PolyP {
    let mut acc = vec![1u64];
    let mut b = poly_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mulmod(&acc, &b, m, p);
        }
        b = poly_mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> PolyP {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b, p);
        a = b;
        b = r;
    }
    if let Some(&lead) = a.last() {
        let s = inv_mod(lead, p);
        a.iter_mut().for_each(|c| *c = mulmod(*c, s, p));
    }
    a
}

fn poly_sub_one(a: &[u64], p: u64) -> PolyP {
    let mut a = a.to_vec();
    if a.is_empty() {
        a.push(0);
    }
    a[0] = (a[0] + p - 1) % p;
    trim(a)
}

/// A root of `m` modulo `p` by equal-degree splitting, if `m` has one.
fn root_mod(m: &[BigInt], p: u64) -> Option<u64> {
    let m: PolyP = trim(m.iter().map(|c| reduce_int(c, p)).collect());
    if m.len() < 2 {
        return None;
    }
    // product of the distinct linear factors: gcd(x^p - x, m)
    let xp = poly_powmod(&[0, 1], p, &m, p);
    let mut x_minus = xp;
    x_minus.resize(x_minus.len().max(2), 0);
    x_minus[1] = (x_minus[1] + p - 1) % p;
    let mut g = poly_gcd(&m, &trim(x_minus), p);
    let mut delta = 1;
    while g.len() > 2 {
        if delta > SPLIT_TRIES {
            return None;
        }
        let h = poly_powmod(&[delta, 1], (p - 1) / 2, &g, p);
        let d = poly_gcd(&g, &poly_sub_one(&h, p), p);
        if d.len() > 1 && d.len() < g.len() {
            g = d;
        }
        delta += 1;
    }
    match g.len() {
        2 => Some((p - g[0]) % p),
        _ => None,
    }
}
