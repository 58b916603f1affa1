use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::FieldElement;

use super::{same_ring, Monomial, PolyError, Ring};

/// Replacement value for a variable in [`Polynomial::substitute`].
#[derive(Clone, Debug)]
pub enum Binding {
    Poly(Polynomial),
    Scalar(FieldElement),
}

/// A polynomial as a list of terms in strictly decreasing monomial order
/// with no zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: FieldElement) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, FieldElement::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: FieldElement) -> Self {
        assert_eq!(
            m.nvars(),
            ring.nvars(),
            "monomial length does not match ring"
        );
        let c = ring
            .field()
            .coerce(&c)
            .expect("coefficient outside the ring's field");
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let i = ring.var_index(name)?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &Ring, i: usize) -> Self {
        Self::monomial(
            ring,
            Monomial::variable(ring.nvars(), i),
            FieldElement::one(),
        )
    }

    /// Builds a polynomial from arbitrary terms: coefficients are coerced
    /// into the ring's field, like monomials are combined, zeros dropped.
    pub fn from_terms(
        ring: &Ring,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Result<Self, PolyError> {
        let mut acc: HashMap<Monomial, FieldElement> = HashMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(PolyError::LengthMismatch(m.nvars(), ring.nvars()));
            }
            let c = ring.field().coerce(&c)?;
            match acc.get_mut(&m) {
                Some(existing) => *existing = existing.checked_add(&c)?,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Ok(Self::from_unsorted(ring, acc.into_iter().collect()))
    }

    /// Terms with distinct monomials, coefficients already in the field.
    pub(crate) fn from_unsorted(ring: &Ring, mut terms: Vec<(Monomial, FieldElement)>) -> Self {
        terms.retain(|(_, c)| !c.is_zero());
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Terms already strictly descending with nonzero coefficients.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, FieldElement)>) -> Self {
        let p = Polynomial {
            ring: ring.clone(),
            terms,
        };
        debug_assert!(p.check_invariants());
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, FieldElement)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&(Monomial, FieldElement)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.terms.first().map(|t| &t.1)
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff_of(&self, m: &Monomial) -> FieldElement {
        let order = self.ring.order();
        self.terms
            .binary_search_by(|(t, _)| order.cmp(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| FieldElement::zero())
    }

    /// Maximum total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// Strictly descending order, no zero coefficients, matching lengths.
    pub fn check_invariants(&self) -> bool {
        let order = self.ring.order();
        self.terms
            .iter()
            .all(|(m, c)| !c.is_zero() && m.nvars() == self.ring.nvars())
            && self
                .terms
                .windows(2)
                .all(|w| order.cmp(&w[0].0, &w[1].0) == Ordering::Greater)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::MixedRings)
        }
    }

    /// Merge of two sorted term lists, `self + sign * other`.
    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(
            b[j..]
                .iter()
                .map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })),
        );
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let c = c1.checked_mul(c2)?;
                match acc.get_mut(&m) {
                    Some(e) => *e = e.checked_add(&c)?,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial::from_unsorted(
            &self.ring,
            acc.into_iter().collect(),
        ))
    }

    pub fn scalar_mul(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// `c * m * self`; multiplying by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(t, x)| (t.mul(m), x * c)).collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn make_monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scalar_mul(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Formal partial derivative with respect to `var`.
    pub fn diff(&self, var: &str) -> Result<Polynomial, PolyError> {
        let i = self.ring.var_index(var)?;
        Ok(self.diff_at(i))
    }

    pub fn diff_at(&self, i: usize) -> Polynomial {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exponents()[i];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm.exps_mut()[i] = e - 1;
            dm.recompute_degree();
            terms.push((dm, c * &FieldElement::from_int(i64::from(e))));
        }
        // lowering one exponent can reorder terms under grevlex ties
        Polynomial::from_unsorted(&self.ring, terms)
    }

    /// Simultaneous substitution of variables by polynomials or scalars.
    pub fn substitute(&self, bindings: &[(&str, Binding)]) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        let mut images: Vec<Option<Polynomial>> = vec![None; n];
        for (name, b) in bindings {
            let i = self.ring.var_index(name)?;
            images[i] = Some(match b {
                Binding::Poly(p) => {
                    self.check_ring(p)?;
                    p.clone()
                }
                Binding::Scalar(c) => {
                    Polynomial::constant(&self.ring, self.ring.field().coerce(c)?)
                }
            });
        }
        // cache of powers per substituted variable
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); n];
        let mut result = Polynomial::zero(&self.ring);
        for (m, c) in &self.terms {
            let mut kept = Monomial::one(n);
            let mut term = Polynomial::one(&self.ring);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match &images[i] {
                    None => kept.exps_mut()[i] = e,
                    Some(img) => {
                        let cache = &mut powers[i];
                        if cache.is_empty() {
                            cache.push(Polynomial::one(&self.ring));
                        }
                        while cache.len() <= e as usize {
                            let next = &cache[cache.len() - 1] * img;
                            cache.push(next);
                        }
                        term = &term * &cache[e as usize];
                    }
                }
            }
            kept.recompute_degree();
            result = &result + &term.mul_term(&kept, c);
        }
        Ok(result)
    }

    /// `Some(d)` when every term has total degree `d`; the zero polynomial
    /// reports the sentinel `-1`.
    pub fn is_homogeneous(&self) -> Option<i64> {
        let Some((first, _)) = self.terms.first() else {
            return Some(-1);
        };
        let d = first.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == d)
            .then_some(d as i64)
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// variable `positions[i]` of the target ring.
    pub fn embed(&self, target: &Ring, positions: &[usize]) -> Polynomial {
        assert_eq!(positions.len(), self.ring.nvars());
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(target.nvars());
                for (i, &e) in m.exponents().iter().enumerate() {
                    out.exps_mut()[positions[i]] = e;
                }
                out.recompute_degree();
                (
                    out,
                    target
                        .field()
                        .coerce(c)
                        .expect("coefficient field mismatch"),
                )
            })
            .collect();
        Polynomial::from_unsorted(target, terms)
    }

    /// Same terms re-sorted under another ring with identical variables.
    pub fn with_ring(&self, target: &Ring) -> Polynomial {
        let positions: Vec<usize> = (0..self.ring.nvars()).collect();
        self.embed(target, &positions)
    }

    /// Renders with `^` exponents and `*` separators, highest term first.
    pub fn render(&self) -> String {
        self.render_with(false)
    }

    /// Like `render`, optionally writing unit exponents as `x^1`.
    pub fn render_with(&self, keep_unit_exponents: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let names = self.ring.variables();
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mono = (!m.is_one()).then(|| m.render(names, keep_unit_exponents));
            let (neg, body) = if c.is_compound() {
                let coef = format!("({c})");
                (
                    false,
                    match &mono {
                        Some(s) => format!("{coef}*{s}"),
                        None => coef,
                    },
                )
            } else {
                let neg = c.is_negative_rational() || c.to_string().starts_with('-');
                let abs = if neg { -c } else { c.clone() };
                let body = match &mono {
                    Some(s) if abs.is_one() => s.clone(),
                    Some(s) => format!("{abs}*{s}"),
                    None => abs.to_string(),
                };
                (neg, body)
            };
            if neg {
                out.push('-');
            } else if idx > 0 {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scalar_mul(&FieldElement::from_int(-1))
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Field;
    use crate::poly::{MonomialOrder, RingContext};
    use proptest::prelude::*;

    fn ring() -> Ring {
        RingContext::new(
            ["w", "x", "y", "z"],
            MonomialOrder::Grevlex,
            Field::Rational,
        )
        .unwrap()
    }

    fn v(r: &Ring, n: &str) -> Polynomial {
        Polynomial::var(r, n).unwrap()
    }

    fn c(r: &Ring, n: i64) -> Polynomial {
        Polynomial::constant(r, FieldElement::from_int(n))
    }

    #[test]
    fn difference_of_squares() {
        let r = ring();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p.to_string(), "x^2-y^2");
        assert_eq!(&p + &Polynomial::zero(&r), p);
    }

    #[test]
    fn binomial_fifth_power() {
        let r = ring();
        let s = &v(&r, "w") + &v(&r, "x");
        let p = s.pow(5);
        assert_eq!(p.len(), 6);
        // oracle: binomial coefficients by Pascal's rule
        let mut row = vec![1i64];
        for _ in 0..5 {
            let mut next = vec![1i64];
            next.extend(row.windows(2).map(|w| w[0] + w[1]));
            next.push(1);
            row = next;
        }
        let got: Vec<String> = p.terms().iter().map(|(_, c)| c.to_string()).collect();
        let want: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn derivatives() {
        let r = ring();
        let (w, x) = (v(&r, "w"), v(&r, "x"));
        let p = &(&w * &w) * &x;
        assert_eq!(p.diff("w").unwrap().to_string(), "2*w*x");
        assert!(c(&r, 7).diff("w").unwrap().is_zero());
        assert!(matches!(p.diff("q"), Err(PolyError::UnknownVariable(_))));
    }

    #[test]
    fn quintic_partial_matches_displayed_formula() {
        // F_{1,1} with K = w^2x + wxy + wy^2 + y^3 + wxz
        let r = ring();
        let (w, x, y, z) = (v(&r, "w"), v(&r, "x"), v(&r, "y"), v(&r, "z"));
        let k = &(&(&(&(&(&w * &w) * &x) + &(&(&w * &x) * &y)) + &(&(&w * &y) * &y)) + &y.pow(3))
            + &(&(&w * &x) * &z);
        let f = &(&(&(&(&w.pow(5) + &(&x * &y.pow(4))) + &(&y * &x.pow(4))) + &z.pow(5))
            + &(&x.pow(2) * &y.pow(3)))
            + &(&(&w * &z) * &k);
        let fx = f.diff("x").unwrap();
        // x2^4 + 4 x1^3 x2 + 2u x1 x2^3 + v x0 x3 dK/dx1
        let expected = &(&(&y.pow(4) + &(&c(&r, 4) * &(&x.pow(3) * &y)))
            + &(&c(&r, 2) * &(&x * &y.pow(3))))
            + &(&(&w * &z) * &k.diff("x").unwrap());
        assert_eq!(fx, expected);
        assert_eq!(f.is_homogeneous(), Some(5));
    }

    #[test]
    fn restriction_to_the_line() {
        // x0 = x3 = 0 in the u-family leaves x1 x2^4 + x2 x1^4 + u x1^2 x2^3
        let r = ring();
        let (w, x, y, z) = (v(&r, "w"), v(&r, "x"), v(&r, "y"), v(&r, "z"));
        let u = c(&r, 3);
        let f = &(&(&(&(&w.pow(5) + &(&x * &y.pow(4))) + &(&y * &x.pow(4))) + &z.pow(5))
            + &(&u * &(&x.pow(2) * &y.pow(3))))
            + &(&w * &z);
        let zero = FieldElement::zero();
        let bar = f
            .substitute(&[
                ("w", Binding::Scalar(zero.clone())),
                ("z", Binding::Scalar(zero)),
            ])
            .unwrap();
        assert_eq!(bar.to_string(), "x^4*y+3*x^2*y^3+x*y^4");
        // dehomogenise y = 1: z + u z^2 + z^4 in x
        let one = FieldElement::one();
        let line = bar.substitute(&[("y", Binding::Scalar(one))]).unwrap();
        assert_eq!(line.to_string(), "x^4+3*x^2+x");
    }

    #[test]
    fn euler_identity_for_quintic() {
        let r = ring();
        let (w, x, y, z) = (v(&r, "w"), v(&r, "x"), v(&r, "y"), v(&r, "z"));
        let f = &(&(&w.pow(5) + &(&x * &y.pow(4))) + &(&y * &x.pow(4))) + &z.pow(5);
        let mut euler = Polynomial::zero(&r);
        for (i, var) in [&w, &x, &y, &z].into_iter().enumerate() {
            euler = &euler + &(var * &f.diff_at(i));
        }
        assert_eq!(euler, f.scalar_mul(&FieldElement::from_int(5)));
    }

    #[test]
    fn identity_substitution_and_homogeneity() {
        let r = ring();
        let (x, y) = (v(&r, "x"), v(&r, "y"));
        let f = &(&x * &x) + &(&x * &y);
        let same = f
            .substitute(&[
                ("x", Binding::Poly(x.clone())),
                ("y", Binding::Poly(y.clone())),
            ])
            .unwrap();
        assert_eq!(same, f);
        assert_eq!(f.is_homogeneous(), Some(2));
        assert_eq!((&(&x * &x) + &x).is_homogeneous(), None);
        assert_eq!(Polynomial::zero(&r).is_homogeneous(), Some(-1));
    }

    #[test]
    fn mixed_rings_rejected() {
        let r1 = ring();
        let r2 = RingContext::new(["x", "y"], MonomialOrder::Grevlex, Field::Rational).unwrap();
        assert_eq!(
            v(&r1, "x").checked_add(&v(&r2, "x")),
            Err(PolyError::MixedRings)
        );
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -5i64..6), 0..6).prop_map(|ts| {
            let r =
                RingContext::new(["x", "y", "z"], MonomialOrder::Grevlex, Field::Rational).unwrap();
            Polynomial::from_terms(
                &r,
                ts.into_iter().map(|((a, b, c), k)| {
                    (
                        Monomial::new(smallvec::smallvec![a, b, c]),
                        FieldElement::from_int(k),
                    )
                }),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn invariants_and_degree_additivity(f in small_poly(), g in small_poly()) {
            let p = &f * &g;
            prop_assert!(p.check_invariants());
            prop_assert!((&f + &g).check_invariants());
            if !f.is_zero() && !g.is_zero() {
                prop_assert_eq!(p.total_degree().unwrap(), f.total_degree().unwrap() + g.total_degree().unwrap());
            }
        }

        #[test]
        fn derivative_rules(f in small_poly(), g in small_poly()) {
            for i in 0..3 {
                prop_assert_eq!((&f + &g).diff_at(i), &f.diff_at(i) + &g.diff_at(i));
                let lhs = (&f * &g).diff_at(i);
                let rhs = &(&f.diff_at(i) * &g) + &(&f * &g.diff_at(i));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
