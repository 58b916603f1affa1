//! Rational functions on the projective line, their local data, residues of
//! the forms `f dz`, and tame symbols.

use std::fmt;

use crate::coeff::{Field, FieldElement};

use super::upoly::UPoly;
use super::{torsion_order, CurvesError, PointOnLine};

/// `num / den` in lowest terms with a monic denominator. The ramification
/// index scales every order, modelling a cyclic cover totally ramified over
/// the points of interest.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: UPoly,
    den: UPoly,
    ramification: u32,
}

impl RationalFunction {
    pub fn new(num: UPoly, den: UPoly) -> Result<Self, CurvesError> {
        if den.is_zero() {
            return Err(CurvesError::ZeroDenominator);
        }
        if num.field() != den.field() {
            return Err(CurvesError::MixedFields);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_zero() || g.degree() == Some(0) {
            (num, den)
        } else {
            (num.divrem(&g)?.0, den.divrem(&g)?.0)
        };
        let lc = den.leading_coeff().expect("nonzero denominator").inv()?;
        num = num.scale(&lc);
        den = den.scale(&lc);
        Ok(RationalFunction {
            num,
            den,
            ramification: 1,
        })
    }

    pub fn polynomial(p: UPoly) -> Self {
        let one = UPoly::one(p.field());
        Self::new(p, one).expect("unit denominator")
    }

    /// Sets the ramification index `e >= 1`.
    pub fn with_ramification(mut self, e: u32) -> Result<Self, CurvesError> {
        if e == 0 {
            return Err(CurvesError::BadRamification);
        }
        self.ramification = e;
        Ok(self)
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn ramification(&self) -> u32 {
        self.ramification
    }

    pub fn field(&self) -> &Field {
        self.num.field()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn same_cover(&self, other: &Self) -> Result<(), CurvesError> {
        if self.ramification != other.ramification {
            return Err(CurvesError::RamificationMismatch);
        }
        if self.field() != other.field() {
            return Err(CurvesError::MixedFields);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self, CurvesError> {
        self.same_cover(other)?;
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))?
            .with_ramification(self.ramification)
    }

    pub fn inv(&self) -> Result<Self, CurvesError> {
        if self.is_zero() {
            return Err(CurvesError::ZeroFunction);
        }
        Self::new(self.den.clone(), self.num.clone())?.with_ramification(self.ramification)
    }

    /// `1 - f`.
    pub fn one_minus(&self) -> Self {
        Self::new(self.den.sub(&self.num), self.den.clone())
            .expect("denominator unchanged")
            .with_ramification(self.ramification)
            .expect("valid ramification")
    }

    /// Order on the line (without ramification) and the value at `p` of
    /// `f / t^order` for the local parameter `t` (`z - a`, or `1/z` at
    /// infinity).
    pub fn local_data(&self, p: &PointOnLine) -> Result<(i64, FieldElement), CurvesError> {
        if self.is_zero() {
            return Err(CurvesError::ZeroFunction);
        }
        match p {
            PointOnLine::Affine(a) => {
                let a = self.field().coerce(a)?;
                let (kn, vn) = self.num.split_at(&a)?;
                let (kd, vd) = self.den.split_at(&a)?;
                Ok((kn as i64 - kd as i64, vn.checked_div(&vd)?))
            }
            PointOnLine::Infinity => {
                let dn = self.num.degree().expect("nonzero") as i64;
                let dd = self.den.degree().expect("nonzero") as i64;
                let unit = self
                    .num
                    .leading_coeff()
                    .expect("nonzero")
                    .checked_div(self.den.leading_coeff().expect("nonzero"))?;
                Ok((dd - dn, unit))
            }
        }
    }

    /// Value at `p`, or `None` at a pole.
    pub fn value_at(&self, p: &PointOnLine) -> Result<Option<FieldElement>, CurvesError> {
        if self.is_zero() {
            return Ok(Some(self.field().zero()));
        }
        let (k, unit) = self.local_data(p)?;
        Ok(match k {
            0 => Some(unit),
            k if k > 0 => Some(self.field().zero()),
            _ => None,
        })
    }

    /// Number of zeros (equivalently poles) on the line, with multiplicity.
    pub fn map_degree(&self) -> usize {
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        dn.max(dd)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)?;
        if self.ramification != 1 {
            write!(f, " [e={}]", self.ramification)?;
        }
        Ok(())
    }
}

/// Vanishing order at `p` on the cover: the order on the line times the
/// ramification index.
pub fn order_at(f: &RationalFunction, p: &PointOnLine) -> Result<i64, CurvesError> {
    let (k, _) = f.local_data(p)?;
    Ok(k * f.ramification as i64)
}

/// First `n` power-series coefficients of `num / den`, with `den(0) != 0`.
fn series(num: &UPoly, den: &UPoly, n: usize) -> Result<Vec<FieldElement>, CurvesError> {
    let d0 = den.coeff(0).inv()?;
    let mut out: Vec<FieldElement> = Vec::with_capacity(n);
    for k in 0..n {
        let mut acc = num.coeff(k);
        for (j, s) in out.iter().enumerate() {
            let dk = den.coeff(k - j);
            if !dk.is_zero() {
                acc = &acc - &(&dk * s);
            }
        }
        out.push(&acc * &d0);
    }
    Ok(out)
}

/// Residue of the 1-form `form(z) dz` at `p`. At infinity the form is
/// pulled back along `z = 1/t`, `dz = -dt/t^2`.
pub fn residue(form: &RationalFunction, p: &PointOnLine) -> Result<FieldElement, CurvesError> {
    let field = form.field().clone();
    if form.is_zero() {
        return Ok(field.zero());
    }
    match p {
        PointOnLine::Affine(a) => {
            let a = field.coerce(a)?;
            let num = form.num.shift(&a);
            let den = form.den.shift(&a);
            let k = den
                .coeffs()
                .iter()
                .position(|c| !c.is_zero())
                .expect("nonzero");
            if k == 0 {
                return Ok(field.zero());
            }
            let unit_den = UPoly::new(&field, den.coeffs()[k..].to_vec());
            let s = series(&num, &unit_den, k)?;
            Ok(s[k - 1].clone())
        }
        PointOnLine::Infinity => {
            let dn = form.num.degree().expect("nonzero") as i64;
            let dd = form.den.degree().expect("nonzero") as i64;
            let j = dn - dd + 1;
            if j < 0 {
                return Ok(field.zero());
            }
            let s = series(&form.num.reversed(), &form.den.reversed(), j as usize + 1)?;
            Ok(-&s[j as usize])
        }
    }
}

/// Tame symbol `(-1)^{mn} (f^n / g^m)(p)` with `m`, `n` the orders of `f`
/// and `g` at `p` on the cover.
pub fn tame_symbol(
    f: &RationalFunction,
    g: &RationalFunction,
    p: &PointOnLine,
) -> Result<FieldElement, CurvesError> {
    f.same_cover(g)?;
    let e = f.ramification as i64;
    let (mf, uf) = f.local_data(p)?;
    let (ng, ug) = g.local_data(p)?;
    let (m, n) = (mf * e, ng * e);
    let value = uf.pow(n)?.checked_div(&ug.pow(m)?)?;
    Ok(if (m * n) % 2 != 0 { -value } else { value })
}

/// Tame symbols of a fixed pair at a list of points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolTuple {
    points: Vec<PointOnLine>,
    values: Vec<FieldElement>,
}

impl SymbolTuple {
    pub fn points(&self) -> &[PointOnLine] {
        &self.points
    }

    pub fn values(&self) -> &[FieldElement] {
        &self.values
    }

    pub fn product(&self) -> FieldElement {
        let one = match self.values.first() {
            Some(v) => v.field().one(),
            None => FieldElement::one(),
        };
        self.values.iter().fold(one, |acc, v| &acc * v)
    }

    /// Multiplicative order of each entry, `None` for non-torsion entries.
    pub fn torsion_orders(&self) -> Vec<Option<u64>> {
        self.values.iter().map(torsion_order).collect()
    }

    pub fn is_torsion(&self) -> bool {
        self.torsion_orders().iter().all(Option::is_some)
    }
}

/// Checks that `points` (distinct) carry every zero and pole of `f`.
fn covers_support(f: &RationalFunction, points: &[PointOnLine]) -> Result<bool, CurvesError> {
    let (mut zeros, mut poles) = (0usize, 0usize);
    for p in points {
        let (k, _) = f.local_data(p)?;
        if k > 0 {
            zeros += k as usize;
        } else {
            poles += (-k) as usize;
        }
    }
    Ok(zeros == f.map_degree() && poles == f.map_degree())
}

/// Per-point tame symbols of `(f, g)`. The points must be distinct and
/// include every zero and pole of both functions; Weil reciprocity is then
/// checked exactly.
pub fn symbol_tuple(
    f: &RationalFunction,
    g: &RationalFunction,
    points: &[PointOnLine],
) -> Result<SymbolTuple, CurvesError> {
    f.same_cover(g)?;
    for (i, p) in points.iter().enumerate() {
        if points[..i].contains(p) {
            return Err(CurvesError::DuplicatePoint(p.to_string()));
        }
    }
    for (name, h) in [("first", f), ("second", g)] {
        if !covers_support(h, points)? {
            return Err(CurvesError::MissingPoint(name));
        }
    }
    let values = points
        .iter()
        .map(|p| tame_symbol(f, g, p))
        .collect::<Result<Vec<_>, _>>()?;
    let tuple = SymbolTuple {
        points: points.to_vec(),
        values,
    };
    let product = tuple.product();
    if !product.is_one() {
        return Err(CurvesError::Reciprocity(product.to_string()));
    }
    Ok(tuple)
}
