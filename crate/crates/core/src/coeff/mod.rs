//! Exact coefficient fields: the rationals and simple extensions of them.

pub mod cyclotomic;
pub mod ext;
mod rational;
pub mod ratpoly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

pub use cyclotomic::{cyclotomic_factor, cyclotomic_polynomial, euler_phi, is_root_of_unity};
pub use ext::{ext_reduce, ExtElement, ExtField};
pub use rational::Rational;
pub use ratpoly::RatPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different coefficient fields")]
    MixedFields,
    #[error("invalid minimal polynomial: {0}")]
    BadMinpoly(String),
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("missing operand for binary operation")]
    MissingOperand,
}

/// A coefficient field: `Q` or a simple extension of it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Ext(Arc<ExtField>),
}

impl Field {
    pub fn zero(&self) -> FieldElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(Rational::from(n))
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        match self {
            Field::Rational => FieldElement::Rational(r),
            Field::Ext(k) => FieldElement::Ext(ExtElement::from_rational(r, k)),
        }
    }

    /// The adjoined generator, if this is an extension.
    pub fn generator(&self) -> Option<FieldElement> {
        match self {
            Field::Rational => None,
            Field::Ext(k) => Some(FieldElement::Ext(ExtElement::generator(k))),
        }
    }

    pub fn generator_name(&self) -> Option<&str> {
        match self {
            Field::Rational => None,
            Field::Ext(f) => Some(f.generator_name()),
        }
    }

    /// Element with the given coordinates in the power basis `1, α, α², …`.
    pub fn element(&self, coeffs: &[Rational]) -> FieldElement {
        match self {
            Field::Rational => {
                FieldElement::Rational(coeffs.first().cloned().unwrap_or_else(Rational::zero))
            }
            Field::Ext(k) => FieldElement::Ext(ext_reduce(coeffs, k)),
        }
    }

    /// Re-expresses `x` in this field (rationals embed into every field).
    pub fn coerce(&self, x: &FieldElement) -> Result<FieldElement, CoeffError> {
        match (self, x) {
            (Field::Rational, FieldElement::Rational(_)) => Ok(x.clone()),
            (Field::Rational, FieldElement::Ext(e)) => e
                .as_rational()
                .map(|r| FieldElement::Rational(r.clone()))
                .ok_or(CoeffError::MixedFields),
            (Field::Ext(k), FieldElement::Rational(r)) => {
                Ok(FieldElement::Ext(ExtElement::from_rational(r.clone(), k)))
            }
            (Field::Ext(k), FieldElement::Ext(e)) => {
                if Arc::ptr_eq(k, e.field()) || **k == **e.field() {
                    Ok(x.clone())
                } else {
                    Err(CoeffError::MixedFields)
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Field::Rational => 1,
            Field::Ext(k) => k.degree(),
        }
    }
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("Q"),
            Field::Ext(k) => write!(f, "{k:?}"),
        }
    }
}

/// An exact scalar. Rationals combine freely with extension elements; two
/// extension elements must come from the same field.
#[derive(Clone)]
pub enum FieldElement {
    Rational(Rational),
    Ext(ExtElement),
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement::Rational(Rational::zero())
    }

    pub fn one() -> Self {
        FieldElement::Rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement::Rational(Rational::from(n))
    }

    pub fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_zero(),
            FieldElement::Ext(e) => e.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            FieldElement::Rational(r) => r.is_one(),
            FieldElement::Ext(e) => e.as_rational().is_some_and(Rational::is_one),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElement::Rational(r) => Some(r),
            FieldElement::Ext(e) => e.as_rational(),
        }
    }

    pub fn field(&self) -> Field {
        match self {
            FieldElement::Rational(_) => Field::Rational,
            FieldElement::Ext(e) => Field::Ext(e.field().clone()),
        }
    }

    /// True when rendering needs parentheses as a polynomial coefficient.
    pub fn is_compound(&self) -> bool {
        match self {
            FieldElement::Rational(_) => false,
            FieldElement::Ext(e) => e.coeffs().iter().filter(|c| !c.is_zero()).count() > 1,
        }
    }

    /// Sign of a purely rational value, used when rendering.
    pub fn is_negative_rational(&self) -> bool {
        self.as_rational().is_some_and(Rational::is_negative)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, CoeffError> {
        use FieldElement::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a + b),
            (Ext(a), Ext(b)) => {
                if !a.same_field(b) {
                    return Err(CoeffError::MixedFields);
                }
                Ext(a.add(b))
            }
            (Ext(a), Rational(b)) | (Rational(b), Ext(a)) => {
                Ext(a.add(&ExtElement::from_rational(b.clone(), a.field())))
            }
        })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, CoeffError> {
        use FieldElement::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a - b),
            (Ext(a), Ext(b)) => {
                if !a.same_field(b) {
                    return Err(CoeffError::MixedFields);
                }
                Ext(a.sub(b))
            }
            (Ext(a), Rational(b)) => Ext(a.sub(&ExtElement::from_rational(b.clone(), a.field()))),
            (Rational(a), Ext(b)) => Ext(ExtElement::from_rational(a.clone(), b.field()).sub(b)),
        })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, CoeffError> {
        use FieldElement::*;
        Ok(match (self, rhs) {
            (Rational(a), Rational(b)) => Rational(a * b),
            (Ext(a), Ext(b)) => {
                if !a.same_field(b) {
                    return Err(CoeffError::MixedFields);
                }
                Ext(a.mul(b))
            }
            (Ext(a), Rational(b)) | (Rational(b), Ext(a)) => Ext(a.scale(b)),
        })
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        match self {
            FieldElement::Rational(r) => r
                .inv()
                .map(FieldElement::Rational)
                .ok_or(CoeffError::DivisionByZero),
            FieldElement::Ext(e) => e
                .inv()
                .map(FieldElement::Ext)
                .ok_or(CoeffError::DivisionByZero),
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, CoeffError> {
        self.checked_mul(&rhs.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self, CoeffError> {
        if exp < 0 {
            return self.inv()?.pow(-exp);
        }
        let mut base = self.clone();
        let mut acc = FieldElement::one();
        let mut e = exp as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Minimal polynomial over Q of this number.
    pub fn minimal_polynomial(&self) -> RatPoly {
        match self {
            FieldElement::Rational(r) => vec![-r, Rational::one()],
            FieldElement::Ext(e) => e.minimal_polynomial(),
        }
    }
}

/// Operations accepted by [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Eq,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ArithResult {
    Value(FieldElement),
    Bool(bool),
}

/// Uniform entry point for scalar arithmetic with explicit error reporting.
pub fn field_arith(
    op: ArithOp,
    a: &FieldElement,
    b: Option<&FieldElement>,
) -> Result<ArithResult, CoeffError> {
    let rhs = || b.ok_or(CoeffError::MissingOperand);
    let value = match op {
        ArithOp::Add => a.checked_add(rhs()?)?,
        ArithOp::Sub => a.checked_sub(rhs()?)?,
        ArithOp::Mul => a.checked_mul(rhs()?)?,
        ArithOp::Div => a.checked_div(rhs()?)?,
        ArithOp::Neg => -a,
        ArithOp::Inv => a.inv()?,
        ArithOp::Eq => {
            let b = rhs()?;
            if let (FieldElement::Ext(x), FieldElement::Ext(y)) = (a, b) {
                if !x.same_field(y) {
                    return Err(CoeffError::MixedFields);
                }
            }
            return Ok(ArithResult::Bool(a == b));
        }
    };
    Ok(ArithResult::Value(value))
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        use FieldElement::*;
        match (self, other) {
            (Rational(a), Rational(b)) => a == b,
            (Ext(a), Ext(b)) => a == b,
            (Ext(a), Rational(b)) | (Rational(b), Ext(a)) => a.as_rational() == Some(b),
        }
    }
}

impl Eq for FieldElement {}

impl std::hash::Hash for FieldElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        match self.as_rational() {
            Some(r) => r.hash(state),
            None => {
                if let FieldElement::Ext(e) = self {
                    e.hash(state)
                }
            }
        }
    }
}

impl From<Rational> for FieldElement {
    fn from(r: Rational) -> Self {
        FieldElement::Rational(r)
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<ExtElement> for FieldElement {
    fn from(e: ExtElement) -> Self {
        FieldElement::Ext(e)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(r) => write!(f, "{r}"),
            FieldElement::Ext(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! panicking_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
    };
}

panicking_binop!(Add, add, checked_add);
panicking_binop!(Sub, sub, checked_sub);
panicking_binop!(Mul, mul, checked_mul);
panicking_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        match self {
            FieldElement::Rational(r) => FieldElement::Rational(-r),
            FieldElement::Ext(e) => FieldElement::Ext(e.neg()),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn eisenstein() -> Field {
        Field::Ext(ExtField::new(ratpoly::from_ints(&[1, -1, 1]), "a").unwrap())
    }

    fn rat(n: i64, d: i64) -> FieldElement {
        FieldElement::Rational(Rational::new(n, d))
    }

    #[test]
    fn arith_entry_point() {
        let r = field_arith(ArithOp::Add, &rat(1, 2), Some(&rat(1, 3))).unwrap();
        assert_eq!(r, ArithResult::Value(rat(5, 6)));
        let k = eisenstein();
        let a = k.generator().unwrap();
        let sq = field_arith(ArithOp::Mul, &a, Some(&a)).unwrap();
        assert_eq!(sq, ArithResult::Value(&a - &FieldElement::one()));
        let inv = field_arith(ArithOp::Inv, &a, None).unwrap();
        assert_eq!(inv, ArithResult::Value(&FieldElement::one() - &a));
        assert_eq!(
            field_arith(ArithOp::Div, &rat(1, 1), Some(&FieldElement::zero())),
            Err(CoeffError::DivisionByZero)
        );
        assert_eq!(
            field_arith(ArithOp::Add, &a, None),
            Err(CoeffError::MissingOperand)
        );
    }

    #[test]
    fn mixed_extensions_rejected() {
        let k1 = eisenstein();
        let k2 = Field::Ext(ExtField::new(ratpoly::from_ints(&[1, 1, 1]), "a").unwrap());
        let a = k1.generator().unwrap();
        let b = k2.generator().unwrap();
        assert_eq!(a.checked_add(&b), Err(CoeffError::MixedFields));
        assert_eq!(
            field_arith(ArithOp::Eq, &a, Some(&b)),
            Err(CoeffError::MixedFields)
        );
    }

    #[test]
    fn rational_promotes_into_extension() {
        let k = eisenstein();
        let a = k.generator().unwrap();
        let s = &a + &rat(1, 1);
        assert_eq!(s.to_string(), "a+1");
        assert_eq!(k.from_int(3), rat(3, 1));
        assert_eq!((-&s).to_string(), "-a-1");
        assert!(!s.is_negative_rational());
    }

    #[test]
    fn generator_satisfies_minpoly() {
        let k = eisenstein();
        let a = k.generator().unwrap();
        let val = &(&(&a * &a) - &a) + &FieldElement::one();
        assert!(val.is_zero());
    }

    fn small_rat() -> impl Strategy<Value = FieldElement> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| rat(n, d))
    }

    fn ext_elem() -> impl Strategy<Value = FieldElement> {
        ((-20i64..20, 1i64..6), (-20i64..20, 1i64..6)).prop_map(|((a, b), (c, d))| {
            eisenstein().element(&[Rational::new(a, b), Rational::new(c, d)])
        })
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rat(), b in small_rat(), c in small_rat()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn extension_inverse_and_distributivity(x in ext_elem(), y in ext_elem(), z in ext_elem()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            if !x.is_zero() {
                prop_assert!((&x * &x.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn ext_reduce_idempotent(coeffs in proptest::collection::vec(-30i64..30, 0..8)) {
            let Field::Ext(k) = eisenstein() else { unreachable!() };
            let raw = ratpoly::from_ints(&coeffs);
            let once = ext_reduce(&raw, &k);
            let twice = ext_reduce(once.coeffs(), &k);
            prop_assert_eq!(&once, &twice);
            // congruent to the input modulo the minimal polynomial
            let diff = ratpoly::sub(&raw, once.coeffs());
            prop_assert!(ratpoly::rem(&diff, k.minpoly()).is_empty());
        }
    }
}
