use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::PolyError;

pub type Exponents = SmallVec<[u32; 6]>;

/// An exponent vector with its cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u64,
    exps: Exponents,
}

impl Monomial {
    pub fn new(exps: impl Into<Exponents>) -> Self {
        let exps = exps.into();
        let degree = exps.iter().map(|&e| u64::from(e)).sum();
        Monomial { degree, exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            degree: 0,
            exps: smallvec::smallvec![0; nvars],
        }
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.degree = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            degree: self.degree + other.degree,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(a, b)| a - b)
            .collect();
        Some(Monomial {
            degree: other.degree - self.degree,
            exps,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect::<Exponents>(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables occurring with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub(crate) fn exps_mut(&mut self) -> &mut Exponents {
        &mut self.exps
    }

    pub(crate) fn recompute_degree(&mut self) {
        self.degree = self.exps.iter().map(|&e| u64::from(e)).sum();
    }

    /// Renders with the given variable names, e.g. `w*x^4*z` or, with
    /// `keep_unit_exponents`, `w^1*x^4*z^1`.
    pub fn render(&self, names: &[String], keep_unit_exponents: bool) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .zip(names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| {
                if e == 1 && !keep_unit_exponents {
                    n.clone()
                } else {
                    format!("{n}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial orders in SINGULAR's conventions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Degree reverse lexicographic (`dp`).
    Grevlex,
    /// Pure lexicographic (`lp`).
    Lex,
    /// Grevlex on the first `k` variables, ties broken by grevlex on the
    /// remaining ones. An elimination order for the first block.
    Block(usize),
}

impl MonomialOrder {
    /// Total order comparison. Panics in debug builds on length mismatch;
    /// see [`compare_monomials`] for the checked variant.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Grevlex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex(&a.exps, &b.exps)),
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Block(k) => {
                let k = k.min(a.exps.len());
                grevlex_slice(&a.exps[..k], &b.exps[..k])
                    .then_with(|| grevlex_slice(&a.exps[k..], &b.exps[k..]))
            }
        }
    }
}

/// Reverse-lexicographic tie-break: the last differing exponent decides,
/// and the smaller exponent wins.
#[inline]
fn revlex(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

#[inline]
fn grevlex_slice(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
    let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
    da.cmp(&db).then_with(|| revlex(a, b))
}

pub fn compare_monomials(
    order: MonomialOrder,
    a: &Monomial,
    b: &Monomial,
) -> Result<Ordering, PolyError> {
    if a.nvars() != b.nvars() {
        return Err(PolyError::LengthMismatch(a.nvars(), b.nvars()));
    }
    Ok(order.cmp(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(Exponents::from_slice(e))
    }

    #[test]
    fn grevlex_tie_break() {
        // (w,x,y,z): x*y > w*z because z has exponent 0 in x*y
        let xy = m(&[0, 1, 1, 0]);
        let wz = m(&[1, 0, 0, 1]);
        assert_eq!(
            compare_monomials(MonomialOrder::Grevlex, &xy, &wz).unwrap(),
            Ordering::Greater
        );
        // variables rank w > x > y > z
        let vars: Vec<_> = (0..4).map(|i| Monomial::variable(4, i)).collect();
        for i in 0..3 {
            assert_eq!(
                MonomialOrder::Grevlex.cmp(&vars[i], &vars[i + 1]),
                Ordering::Greater
            );
        }
    }

    #[test]
    fn lex_leftmost_dominates() {
        let w = m(&[1, 0]);
        let x100 = m(&[0, 100]);
        assert_eq!(
            compare_monomials(MonomialOrder::Lex, &w, &x100).unwrap(),
            Ordering::Greater
        );
        assert_eq!(MonomialOrder::Grevlex.cmp(&w, &x100), Ordering::Less);
    }

    #[test]
    fn reflexive_and_checked() {
        let a = m(&[2, 1, 0]);
        for order in [
            MonomialOrder::Grevlex,
            MonomialOrder::Lex,
            MonomialOrder::Block(1),
        ] {
            assert_eq!(order.cmp(&a, &a), Ordering::Equal);
        }
        assert!(compare_monomials(MonomialOrder::Lex, &a, &m(&[1, 1])).is_err());
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let t = m(&[1, 0, 0]);
        let big = m(&[0, 9, 9]);
        assert_eq!(MonomialOrder::Block(1).cmp(&t, &big), Ordering::Greater);
        // inside the second block: grevlex
        assert_eq!(
            MonomialOrder::Block(1).cmp(&m(&[0, 1, 1]), &m(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2, 0]);
        let b = m(&[2, 2, 1]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b).unwrap(), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&m(&[0, 3, 1])), m(&[1, 3, 1]));
        assert!(m(&[1, 0, 0]).gcd_is_one(&m(&[0, 4, 0])));
    }
}
