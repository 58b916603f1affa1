//! The roots of `z^3 + u z + 1`: an explicit splitting field when one of
//! small degree exists, logarithmic derivatives in `u`, and the polynomial
//! whose roots are the `k`-th powers of the roots.

use num_bigint::BigInt;
use num_traits::Signed;

use crate::coeff::ratpoly::{self, RatPoly};
use crate::coeff::{ExtField, Field, FieldElement, Rational};

use super::upoly::UPoly;
use super::CurvesError;

/// `-4u^3 - 27`, the discriminant of `z^3 + u z + 1`.
pub fn discriminant(u: &Rational) -> Rational {
    let u3 = u * &(u * u);
    &(&Rational::from(-4) * &u3) - &Rational::from(27)
}

fn cubic(u: &Rational) -> RatPoly {
    vec![
        Rational::one(),
        u.clone(),
        Rational::zero(),
        Rational::one(),
    ]
}

fn require_squarefree(u: &Rational) -> Result<(), CurvesError> {
    if discriminant(u).is_zero() {
        return Err(CurvesError::RepeatedRoot(u.to_string()));
    }
    Ok(())
}

/// Square root in Q, if there is one.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let root = |n: &BigInt| -> Option<BigInt> {
        let s = n.abs().sqrt();
        (&s * &s == n.abs()).then_some(s)
    };
    Some(Rational::new(root(r.numer())?, root(r.denom())?))
}

/// The three roots `a, b, c` of `z^3 + u z + 1` in an explicit field, so
/// that `a + b + c = 0`, `ab + bc + ca = u` and `abc = -1` hold exactly.
#[derive(Clone, Debug)]
pub struct CubicRoots {
    u: Rational,
    field: Field,
    roots: [FieldElement; 3],
}

impl CubicRoots {
    /// Builds a splitting field named by `generator`. With a rational root
    /// `r` the roots are `[r, t, -r - t]` for `t` a root of the quadratic
    /// cofactor. A cubic without rational roots is split by adjoining one
    /// root `t` when the discriminant is a square, with roots
    /// `[t, (-t + s)/2, (-t - s)/2]`; otherwise the splitting field has
    /// degree 6 and is not constructed.
    pub fn new(u: Rational, generator: &str) -> Result<Self, CurvesError> {
        require_squarefree(&u)?;
        let f = cubic(&u);
        let roots: [FieldElement; 3];
        let field;
        if let Some(r) = ratpoly::rational_roots(&f).first().cloned() {
            // cofactor z^2 + r z + (r^2 + u)
            let c0 = &(&r * &r) + &u;
            let delta = &(&Rational::from(-3) * &(&r * &r)) - &(&Rational::from(4) * &u);
            if let Some(s) = rational_sqrt(&delta) {
                field = Field::Rational;
                let half = Rational::new(1, 2);
                let b = &(&s - &r) * &half;
                let c = &(&-&s - &r) * &half;
                roots = [r.into(), b.into(), c.into()];
            } else {
                let k = ExtField::new(vec![c0, r.clone(), Rational::one()], generator)?;
                field = Field::Ext(k);
                let t = field.generator().expect("extension");
                let other = &-&t - &field.from_rational(r.clone());
                roots = [field.from_rational(r), t, other];
            }
        } else if let Some(sd) = rational_sqrt(&discriminant(&u)) {
            let k = ExtField::new(f, generator)?;
            field = Field::Ext(k);
            let t = field.generator().expect("extension");
            // (a-b)(a-c) = f'(a), and sqrt(D) = (a-b)(b-c)(c-a) gives b - c
            let fp = &(&field.from_int(3) * &(&t * &t)) + &field.from_rational(u.clone());
            let s = (-&field.from_rational(sd)).checked_div(&fp)?;
            let half = field.from_rational(Rational::new(1, 2));
            let b = &(&s - &t) * &half;
            let c = &(&-&s - &t) * &half;
            roots = [t, b, c];
        } else {
            return Err(CurvesError::NoSmallSplittingField(u.to_string()));
        }
        let out = CubicRoots { u, field, roots };
        debug_assert!(out.relations_hold());
        Ok(out)
    }

    pub fn u(&self) -> &Rational {
        &self.u
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn roots(&self) -> &[FieldElement; 3] {
        &self.roots
    }

    /// `z^3 + u z + 1` over the splitting field.
    pub fn polynomial(&self) -> UPoly {
        let f = &self.field;
        UPoly::new(
            f,
            vec![f.one(), f.from_rational(self.u.clone()), f.zero(), f.one()],
        )
    }

    /// Elementary symmetric functions match `(0, u, -1)` and every root
    /// annihilates the cubic.
    pub fn relations_hold(&self) -> bool {
        let [a, b, c] = &self.roots;
        let f = &self.field;
        let e1 = &(a + b) + c;
        let e2 = &(&(a * b) + &(b * c)) + &(c * a);
        let e3 = &(a * b) * c;
        let p = self.polynomial();
        e1.is_zero()
            && e2 == f.from_rational(self.u.clone())
            && e3 == f.from_int(-1)
            && self.roots.iter().all(|r| p.eval(r).is_zero())
    }

    /// `(1/r) dr/du = -1/f'(r) = -1/((r - s)(r - t))` for each root `r`,
    /// in root order.
    pub fn root_derivative(&self) -> Result<[FieldElement; 3], CurvesError> {
        let [a, b, c] = &self.roots;
        let one = self.field.one();
        let d = |r: &FieldElement, s: &FieldElement, t: &FieldElement| {
            (-&one).checked_div(&(&(r - s) * &(r - t)))
        };
        Ok([d(a, b, c)?, d(b, c, a)?, d(c, a, b)?])
    }
}

/// Characteristic polynomial of a square rational matrix, monic, lowest
/// degree first (Faddeev–LeVerrier).
pub fn charpoly(a: &[Vec<Rational>]) -> RatPoly {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for l in 0..n {
                    if !a[i][l].is_zero() && !m[l][j].is_zero() {
                        acc += &(&a[i][l] * &m[l][j]);
                    }
                }
                next[i][j] = acc;
            }
            next[i][i] += &coeffs[n - k + 1];
        }
        m = next;
        let mut trace = Rational::zero();
        for i in 0..n {
            for l in 0..n {
                trace += &(&a[i][l] * &m[l][i]);
            }
        }
        coeffs[n - k] = &-&trace * &Rational::new(1, k as i64);
    }
    coeffs
}

/// Monic cubic whose roots are `r^k` for the roots `r` of `z^3 + u z + 1`:
/// the characteristic polynomial of multiplication by `z^k` on
/// `Q[z]/(z^3 + u z + 1)`, which equals the resultant
/// `Res_z(z^3 + u z + 1, w - z^k)`.
pub fn minpoly_of_power(u: &Rational, k: u32) -> Result<RatPoly, CurvesError> {
    require_squarefree(u)?;
    let f = cubic(u);
    let mut zk: RatPoly = vec![Rational::one()];
    for _ in 0..k {
        zk = ratpoly::rem(&ratpoly::mul(&zk, &[Rational::zero(), Rational::one()]), &f);
    }
    // column j holds the coordinates of z^k * z^j
    let mut columns: Vec<RatPoly> = Vec::with_capacity(3);
    let mut cur = zk;
    for _ in 0..3 {
        columns.push(cur.clone());
        cur = ratpoly::rem(
            &ratpoly::mul(&cur, &[Rational::zero(), Rational::one()]),
            &f,
        );
    }
    let matrix: Vec<Vec<Rational>> = (0..3)
        .map(|i| {
            columns
                .iter()
                .map(|col| col.get(i).cloned().unwrap_or_else(Rational::zero))
                .collect()
        })
        .collect();
    Ok(charpoly(&matrix))
}
