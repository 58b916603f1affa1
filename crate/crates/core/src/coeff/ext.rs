//! Simple algebraic extensions `Q[α]/(m(α))`.

use std::fmt;
use std::sync::Arc;

use super::ratpoly::{self, RatPoly};
use super::{CoeffError, Rational};

/// Largest extension degree accepted by [`ExtField::new`].
pub const MAX_EXT_DEGREE: usize = 4;

/// The field `Q[α]/(m(α))` for a monic irreducible `m`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtField {
    minpoly: RatPoly,
    generator: String,
}

impl ExtField {
    /// Builds the extension defined by `minpoly` (lowest degree first).
    ///
    /// Irreducibility is verified for degree 2 and 3 (no rational root);
    /// above that it is a caller precondition.
    pub fn new(minpoly: RatPoly, generator: impl Into<String>) -> Result<Arc<Self>, CoeffError> {
        let minpoly = ratpoly::trimmed(minpoly);
        let deg = ratpoly::degree(&minpoly).unwrap_or(0);
        if deg < 2 {
            return Err(CoeffError::BadMinpoly(format!(
                "extension degree must be at least 2, got {deg}"
            )));
        }
        if deg > MAX_EXT_DEGREE {
            return Err(CoeffError::BadMinpoly(format!(
                "extension degree {deg} exceeds supported maximum {MAX_EXT_DEGREE}"
            )));
        }
        if !ratpoly::is_monic(&minpoly) {
            return Err(CoeffError::BadMinpoly(
                "minimal polynomial must be monic".into(),
            ));
        }
        if deg <= 3 && !ratpoly::rational_roots(&minpoly).is_empty() {
            return Err(CoeffError::BadMinpoly(
                "minimal polynomial has a rational root".into(),
            ));
        }
        Ok(Arc::new(ExtField {
            minpoly,
            generator: generator.into(),
        }))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    pub fn generator_name(&self) -> &str {
        &self.generator
    }
}

impl fmt::Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Q[{}]/({})",
            self.generator,
            render_ratpoly(&self.minpoly, &self.generator)
        )
    }
}

/// Reduces an arbitrary polynomial in the generator to canonical form
/// (degree below the extension degree).
pub fn ext_reduce(raw: &[Rational], field: &Arc<ExtField>) -> ExtElement {
    let r = ratpoly::rem(raw, &field.minpoly);
    ExtElement::from_reduced(r, field.clone())
}

/// An element of an [`ExtField`] in canonical form: exactly `degree`
/// coefficients, lowest power first.
#[derive(Clone)]
pub struct ExtElement {
    coeffs: Vec<Rational>,
    field: Arc<ExtField>,
}

impl ExtElement {
    fn from_reduced(mut coeffs: RatPoly, field: Arc<ExtField>) -> Self {
        let d = field.degree();
        debug_assert!(coeffs.len() <= d);
        coeffs.resize(d, Rational::zero());
        ExtElement { coeffs, field }
    }

    pub fn from_rational(r: Rational, field: &Arc<ExtField>) -> Self {
        Self::from_reduced(vec![r], field.clone())
    }

    pub fn generator(field: &Arc<ExtField>) -> Self {
        ext_reduce(&[Rational::zero(), Rational::one()], field)
    }

    pub fn field(&self) -> &Arc<ExtField> {
        &self.field
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// The rational value if the element lies in the prime field.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    pub(crate) fn same_field(&self, other: &ExtElement) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || *self.field == *other.field
    }

    pub(crate) fn add(&self, other: &ExtElement) -> ExtElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        ExtElement {
            coeffs,
            field: self.field.clone(),
        }
    }

    pub(crate) fn sub(&self, other: &ExtElement) -> ExtElement {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        ExtElement {
            coeffs,
            field: self.field.clone(),
        }
    }

    pub(crate) fn neg(&self) -> ExtElement {
        ExtElement {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            field: self.field.clone(),
        }
    }

    pub(crate) fn mul(&self, other: &ExtElement) -> ExtElement {
        ext_reduce(&ratpoly::mul(&self.coeffs, &other.coeffs), &self.field)
    }

    pub(crate) fn scale(&self, r: &Rational) -> ExtElement {
        ExtElement {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
            field: self.field.clone(),
        }
    }

    /// Inverse via the extended Euclidean algorithm against the minimal
    /// polynomial.
    pub(crate) fn inv(&self) -> Option<ExtElement> {
        if self.is_zero() {
            return None;
        }
        let (g, s, _) = ratpoly::ext_gcd(&self.coeffs, &self.field.minpoly);
        // irreducible minpoly: gcd is 1 for every nonzero element
        debug_assert_eq!(g, vec![Rational::one()]);
        Some(ext_reduce(&s, &self.field))
    }

    /// Minimal polynomial over Q (monic, lowest degree first), found as the
    /// first linear dependency among `1, x, x^2, ...`.
    pub fn minimal_polynomial(&self) -> RatPoly {
        let d = self.field.degree();
        // rows: coordinate vectors of powers, echelonised incrementally
        let mut powers: Vec<Vec<Rational>> = Vec::new();
        let mut cur = ExtElement::from_rational(Rational::one(), &self.field);
        for k in 0..=d {
            powers.push(cur.coeffs.clone());
            if let Some(rel) = dependency(&powers) {
                debug_assert_eq!(rel.len(), k + 1);
                return ratpoly::make_monic(&rel);
            }
            cur = cur.mul(self);
        }
        unreachable!("d+1 vectors in a d-dimensional space are dependent")
    }
}

/// If the last vector is a combination of the earlier (independent) ones,
/// returns coefficients `c` with `sum c_i v_i = 0` and `c_last = 1`.
fn dependency(vectors: &[Vec<Rational>]) -> Option<RatPoly> {
    let n = vectors.len();
    let dim = vectors[0].len();
    // solve sum_{i<n-1} y_i v_i = v_last by Gaussian elimination on columns
    let mut m: Vec<Vec<Rational>> = (0..dim)
        .map(|r| {
            let mut row: Vec<Rational> = (0..n - 1).map(|i| vectors[i][r].clone()).collect();
            row.push(vectors[n - 1][r].clone());
            row
        })
        .collect();
    let cols = n - 1;
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..dim).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().unwrap();
        for c in col..=cols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..dim {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let t = &f * &m[row][c];
                    m[r][c] -= &t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..dim).any(|r| !m[r][cols].is_zero()) {
        return None;
    }
    let mut y = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        y[c] = m[r][cols].clone();
    }
    let mut rel: RatPoly = y.into_iter().map(|v| -v).collect();
    rel.push(Rational::one());
    Some(rel)
}

impl PartialEq for ExtElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coeffs == other.coeffs
    }
}

impl Eq for ExtElement {}

impl std::hash::Hash for ExtElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ratpoly(&self.coeffs, &self.field.generator))
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders `c_k*a^k+...+c_0`, highest power first, e.g. `-5/3*a-5/3`.
pub fn render_ratpoly(p: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let var_part = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&var_part);
        } else {
            out.push_str(&format!("{abs}*{var_part}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eisenstein() -> Arc<ExtField> {
        // a^2 - a + 1
        ExtField::new(ratpoly::from_ints(&[1, -1, 1]), "a").unwrap()
    }

    #[test]
    fn square_of_generator() {
        let k = eisenstein();
        let a = ExtElement::generator(&k);
        assert_eq!(a.mul(&a).to_string(), "a-1");
    }

    #[test]
    fn inverse_of_generator() {
        let k = eisenstein();
        let a = ExtElement::generator(&k);
        let inv = a.inv().unwrap();
        assert_eq!(inv.to_string(), "-a+1");
        // a * (1 - a) reduces to 1
        let prod = ext_reduce(&ratpoly::mul(a.coeffs(), inv.coeffs()), &k);
        assert_eq!(prod.as_rational(), Some(&Rational::one()));
    }

    #[test]
    fn fifth_power_mod_cyclotomic_three() {
        let k = ExtField::new(ratpoly::from_ints(&[1, 1, 1]), "z").unwrap();
        let raw = ratpoly::from_ints(&[0, 0, 0, 0, 0, 1]);
        // z^5 = z^2 * z^3 = z^2 = -z - 1
        assert_eq!(ext_reduce(&raw, &k).to_string(), "-z-1");
        let seven = ext_reduce(&ratpoly::from_ints(&[7]), &k);
        assert_eq!(seven.to_string(), "7");
    }

    #[test]
    fn rejects_reducible_and_nonmonic() {
        assert!(ExtField::new(ratpoly::from_ints(&[-1, 0, 1]), "a").is_err());
        assert!(ExtField::new(ratpoly::from_ints(&[1, 0, 2]), "a").is_err());
        assert!(ExtField::new(ratpoly::from_ints(&[1, 1]), "a").is_err());
    }

    #[test]
    fn minimal_polynomials() {
        let k = eisenstein();
        let a = ExtElement::generator(&k);
        assert_eq!(a.minimal_polynomial(), ratpoly::from_ints(&[1, -1, 1]));
        let three = ExtElement::from_rational(Rational::from(3), &k);
        assert_eq!(three.minimal_polynomial(), ratpoly::from_ints(&[-3, 1]));
        // a^2 = a - 1 is a primitive cube root of unity
        assert_eq!(
            a.mul(&a).minimal_polynomial(),
            ratpoly::from_ints(&[1, 1, 1])
        );
    }
}
