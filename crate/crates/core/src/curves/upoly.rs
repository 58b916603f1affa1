//! Dense univariate polynomials over a coefficient field.

use std::fmt;

use crate::coeff::{Field, FieldElement};

use super::CurvesError;

/// Coefficients lowest degree first, without trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct UPoly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl UPoly {
    pub fn zero(field: &Field) -> Self {
        UPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: &Field, c: FieldElement) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Self {
        Self::constant(field, field.one())
    }

    /// The coordinate `z`.
    pub fn identity(field: &Field) -> Self {
        Self::new(field, vec![field.zero(), field.one()])
    }

    /// `z - a`.
    pub fn linear(field: &Field, root: &FieldElement) -> Self {
        Self::new(field, vec![-root, field.one()])
    }

    pub fn new(field: &Field, coeffs: Vec<FieldElement>) -> Self {
        let mut coeffs: Vec<FieldElement> = coeffs
            .iter()
            .map(|c| field.coerce(c).unwrap_or_else(|e| panic!("{e}")))
            .collect();
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        UPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            &self.field,
            (0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::new(&self.field, out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(&self.field), |acc, _| acc.mul(self))
    }

    /// Euclidean division; fails on a zero divisor.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self), CurvesError> {
        let d = divisor.degree().ok_or(CurvesError::ZeroFunction)?;
        let inv = divisor.coeffs[d].inv()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(d)];
        while rem.len() > d && !rem.is_empty() {
            let k = rem.len() - 1 - d;
            let c = &rem[rem.len() - 1] * &inv;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * b);
            }
            quot[k] = c;
            rem.pop();
            while rem.last().is_some_and(FieldElement::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(&self.field, quot), Self::new(&self.field, rem)))
    }

    pub fn make_monic(&self) -> Self {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            &self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &self.field.from_int(k as i64))
                .collect(),
        )
    }

    /// `p(z + a)`, by repeated synthetic division.
    pub fn shift(&self, a: &FieldElement) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] = &c[j] + &(a * &c[j + 1]);
            }
        }
        Self::new(&self.field, c)
    }

    /// Coefficients in reverse order: `z^deg p(1/z)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(&self.field, c)
    }

    /// Multiplicity of `a` as a root, and the cofactor's value at `a`.
    pub fn split_at(&self, a: &FieldElement) -> Result<(usize, FieldElement), CurvesError> {
        if self.is_zero() {
            return Err(CurvesError::ZeroFunction);
        }
        let shifted = self.shift(a);
        let k = shifted
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("nonzero polynomial");
        Ok((k, shifted.coeffs[k].clone()))
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_compound() {
                format!("({c})")
            } else {
                c.to_string()
            };
            if !first && !coeff.starts_with('-') {
                f.write_str("+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{coeff}")?,
                _ if c.is_one() => write!(f, "z^{k}")?,
                _ => write!(f, "{coeff}*z^{k}")?,
            }
        }
        Ok(())
    }
}
