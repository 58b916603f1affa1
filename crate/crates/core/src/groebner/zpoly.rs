//! Integral working representation for the Gröbner engine.
//!
//! Coefficients live in `Z`, or in `Z[β]` where `β` is an integral multiple
//! of the field generator with a monic integral minimal polynomial. Reduction is fraction-free (`p ← L·p − c·m·g`) with content
//! removal, which avoids the gcd on every rational operation.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use crate::coeff::{Field, FieldElement, Rational};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};

/// Coordinates in the power basis `1, β, …, β^{d-1}` (`d = 1` over `Q`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZCoef(SmallVec<[BigInt; 2]>);

pub(crate) type ZTerms = Vec<(Monomial, ZCoef)>;

/// Arithmetic context: extension degree and the integral minimal polynomial.
#[derive(Clone, Debug)]
pub(crate) struct ZCtx {
    ring: Ring,
    degree: usize,
    /// `m_0, …, m_{d-1}` of `β^d + m_{d-1} β^{d-1} + … + m_0`, where
    /// `β = D·α` has an integral minimal polynomial
    minpoly: Vec<BigInt>,
    /// `D^k` for `k < d`
    powers: Vec<BigInt>,
}

impl ZCoef {
    pub(crate) fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// The integer value, if the element is one.
    pub(crate) fn as_int(&self) -> Option<&BigInt> {
        self.0[1..].iter().all(Zero::is_zero).then(|| &self.0[0])
    }

    fn neg(&self) -> ZCoef {
        ZCoef(self.0.iter().map(|x| -x).collect())
    }

    fn scale(&self, k: &BigInt) -> ZCoef {
        ZCoef(self.0.iter().map(|x| x * k).collect())
    }

    fn div_exact(&self, k: &BigInt) -> ZCoef {
        ZCoef(self.0.iter().map(|x| x / k).collect())
    }

    fn gcd_into(&self, acc: &mut BigInt) {
        for x in &self.0 {
            if acc.is_one() {
                return;
            }
            if !x.is_zero() {
                *acc = acc.gcd(x);
            }
        }
    }
}

impl ZCtx {
    pub(crate) fn new(ring: &Ring) -> ZCtx {
        match ring.field() {
            Field::Rational => ZCtx {
                ring: ring.clone(),
                degree: 1,
                minpoly: Vec::new(),
                powers: vec![BigInt::one()],
            },
            Field::Ext(k) => {
                let d = k.degree();
                let mp = k.minpoly();
                let scale = Rational::denom_lcm(mp.iter());
                let mut powers = vec![BigInt::one()];
                for _ in 1..=d {
                    let next = powers.last().unwrap() * &scale;
                    powers.push(next);
                }
                // D^d · m(β/D) = β^d + Σ m_k D^{d-k} β^k
                let minpoly = (0..d)
                    .map(|k| {
                        let v = &mp[k] * &Rational::from(powers[d - k].clone());
                        debug_assert!(v.is_integer());
                        v.numer().clone()
                    })
                    .collect();
                powers.truncate(d);
                ZCtx {
                    ring: ring.clone(),
                    degree: d,
                    minpoly,
                    powers,
                }
            }
        }
    }

    /// Coordinates in the `β` basis.
    fn coords_of(&self, c: &FieldElement) -> Vec<Rational> {
        match c {
            FieldElement::Rational(r) => {
                let mut v = vec![Rational::zero(); self.degree];
                v[0] = r.clone();
                v
            }
            FieldElement::Ext(e) => e
                .coeffs()
                .iter()
                .zip(&self.powers)
                .map(|(x, p)| x / &Rational::from(p.clone()))
                .collect(),
        }
    }

    #[cfg(test)]
    pub(crate) fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    fn int(&self, k: BigInt) -> ZCoef {
        let mut v: SmallVec<[BigInt; 2]> = smallvec::smallvec![BigInt::zero(); self.degree];
        v[0] = k;
        ZCoef(v)
    }

    pub(crate) fn mul(&self, a: &ZCoef, b: &ZCoef) -> ZCoef {
        if self.degree == 1 {
            return ZCoef(smallvec::smallvec![&a.0[0] * &b.0[0]]);
        }
        let d = self.degree;
        let mut raw = vec![BigInt::zero(); 2 * d - 1];
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        for k in (d..2 * d - 1).rev() {
            let t = std::mem::take(&mut raw[k]);
            if t.is_zero() {
                continue;
            }
            for (i, m) in self.minpoly.iter().enumerate() {
                raw[k - d + i] -= &t * m;
            }
        }
        raw.truncate(d);
        ZCoef(raw.into_iter().collect())
    }

    /// `a·x − b·y`
    fn axmby(&self, a: Option<&BigInt>, x: &ZCoef, b: &ZCoef, y: &ZCoef) -> ZCoef {
        let by = self.mul(b, y);
        let ax = match a {
            Some(a) => x.scale(a),
            None => x.clone(),
        };
        ZCoef(ax.0.into_iter().zip(by.0).map(|(p, q)| p - q).collect())
    }

    /// Integral terms and the rational factor `s` with `poly = s · terms`.
    pub(crate) fn encode(&self, p: &Polynomial) -> (ZTerms, Rational) {
        let coords: Vec<Vec<Rational>> = p.terms().iter().map(|(_, c)| self.coords_of(c)).collect();
        let l = Rational::denom_lcm(coords.iter().flatten());
        let terms = p
            .terms()
            .iter()
            .zip(&coords)
            .map(|((m, _), cs)| {
                let v = cs.iter().map(|r| r.numer() * (&l / r.denom())).collect();
                (m.clone(), ZCoef(v))
            })
            .collect();
        (terms, Rational::new(BigInt::one(), l))
    }

    pub(crate) fn to_field(&self, c: &ZCoef) -> FieldElement {
        let rats: Vec<Rational> =
            c.0.iter()
                .zip(&self.powers)
                .map(|(x, p)| Rational::from(x * p))
                .collect();
        self.ring.field().element(&rats)
    }

    /// `s · terms` as a polynomial.
    pub(crate) fn to_poly(&self, terms: &ZTerms, s: &Rational) -> Polynomial {
        let s = self.ring.field().from_rational(s.clone());
        let out = terms
            .iter()
            .map(|(m, c)| (m.clone(), &self.to_field(c) * &s))
            .collect();
        Polynomial::from_sorted(&self.ring, out)
    }

    /// Divides out the integer content; returns it (1 for the zero polynomial).
    pub(crate) fn make_primitive(&self, terms: &mut ZTerms) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in terms.iter() {
            c.gcd_into(&mut g);
            if g.is_one() {
                return g;
            }
        }
        if g.is_zero() || g.is_one() {
            return BigInt::one();
        }
        for (_, c) in terms.iter_mut() {
            *c = c.div_exact(&g);
        }
        g
    }

    /// Scales so the leading coefficient is a positive integer and the
    /// content is 1. Returns `u` with `new = u · old`.
    pub(crate) fn normalize(&self, terms: &mut ZTerms) -> FieldElement {
        let Some((_, lc)) = terms.first() else {
            return self.ring.field().one();
        };
        let mut factor = self.ring.field().one();
        if lc.as_int().is_none() {
            // multiply by an integral multiple of lc⁻¹
            let inv = self.to_field(lc).inv().expect("nonzero");
            let (it, s) = self.encode(&Polynomial::constant(&self.ring, inv.clone()));
            let e = it[0].1.clone();
            for (_, c) in terms.iter_mut() {
                *c = self.mul(c, &e);
            }
            factor = &inv * &self.ring.field().from_rational(s.inv().unwrap());
        }
        if terms[0].1.as_int().unwrap().is_negative() {
            for (_, c) in terms.iter_mut() {
                *c = c.neg();
            }
            factor = -&factor;
        }
        let g = self.make_primitive(terms);
        let g = self.ring.field().from_rational(Rational::from(g));
        factor.checked_div(&g).expect("nonzero content")
    }
}

/// `a·p − b·m·g` for sorted term lists (`a = None` means 1).
pub(crate) fn sub_scaled(
    ctx: &ZCtx,
    a: Option<&BigInt>,
    p: &[(Monomial, ZCoef)],
    b: &ZCoef,
    m: &Monomial,
    g: &[(Monomial, ZCoef)],
) -> ZTerms {
    let order = ctx.order();
    let mut out = Vec::with_capacity(p.len() + g.len());
    let scale = |c: &ZCoef| match a {
        Some(a) => c.scale(a),
        None => c.clone(),
    };
    let mut i = 0;
    let mut gi = g.iter().map(|(t, x)| (t.mul(m), x)).peekable();
    while i < p.len() {
        let Some((gm, gc)) = gi.peek() else { break };
        match order.cmp(&p[i].0, gm) {
            Ordering::Greater => {
                out.push((p[i].0.clone(), scale(&p[i].1)));
                i += 1;
            }
            Ordering::Less => {
                out.push((gm.clone(), ctx.mul(b, gc).neg()));
                gi.next();
            }
            Ordering::Equal => {
                let v = ctx.axmby(a, &p[i].1, b, gc);
                if !v.is_zero() {
                    out.push((p[i].0.clone(), v));
                }
                i += 1;
                gi.next();
            }
        }
    }
    out.extend(p[i..].iter().map(|(m, c)| (m.clone(), scale(c))));
    for (gm, gc) in gi {
        out.push((gm, ctx.mul(b, gc).neg()));
    }
    out
}

/// A basis element prepared for reduction: positive integer leading
/// coefficient.
#[derive(Clone, Debug)]
pub(crate) struct Reducer {
    pub(crate) terms: ZTerms,
    pub(crate) lead: Monomial,
    pub(crate) lc: BigInt,
}

impl Reducer {
    pub(crate) fn new(terms: ZTerms) -> Reducer {
        let lead = terms[0].0.clone();
        let lc = terms[0]
            .1
            .as_int()
            .expect("normalized leading coefficient")
            .clone();
        Reducer { terms, lead, lc }
    }
}

/// `(L/lm f)·f·lc(g) − (L/lm g)·g·lc(f)` up to the common factor of the
/// leading coefficients, with `L = lcm(lm f, lm g)`.
pub(crate) fn spoly(ctx: &ZCtx, f: &Reducer, g: &Reducer) -> ZTerms {
    let l = f.lead.lcm(&g.lead);
    let h = f.lc.gcd(&g.lc);
    let a = &g.lc / &h;
    let b = ctx.int(&f.lc / &h);
    let mf = f.lead.quotient_of(&l).unwrap();
    let mg = g.lead.quotient_of(&l).unwrap();
    let shifted: ZTerms = f.terms[1..]
        .iter()
        .map(|(m, c)| (m.mul(&mf), c.clone()))
        .collect();
    let a_opt = (!a.is_one()).then_some(&a);
    sub_scaled(ctx, a_opt, &shifted, &b, &mg, &g.terms[1..])
}

/// Basis elements converted once for repeated reductions.
#[derive(Clone, Debug)]
pub(crate) struct Prepared {
    pub(crate) ctx: ZCtx,
    pub(crate) reducers: Vec<Reducer>,
}

impl Prepared {
    pub(crate) fn new(ring: &Ring, basis: &[Polynomial]) -> Prepared {
        let ctx = ZCtx::new(ring);
        let reducers = basis
            .iter()
            .filter(|g| !g.is_zero())
            .map(|g| {
                let (mut t, _) = ctx.encode(g);
                ctx.normalize(&mut t);
                Reducer::new(t)
            })
            .collect();
        Prepared { ctx, reducers }
    }

    pub(crate) fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let (t, s0) = self.ctx.encode(f);
        let refs: Vec<&Reducer> = self.reducers.iter().collect();
        let (r, s) = reduce(&self.ctx, t, &refs);
        self.ctx.to_poly(&r, &(&s0 / &s))
    }

    pub(crate) fn reduces_to_zero(&self, f: &Polynomial) -> bool {
        let (t, _) = self.ctx.encode(f);
        let refs: Vec<&Reducer> = self.reducers.iter().collect();
        reduce(&self.ctx, t, &refs).0.is_empty()
    }
}

/// Full fraction-free reduction. Returns the remainder `r` and `s` with
/// `r ≡ s · p` modulo the reducers (`s` a nonzero rational).
pub(crate) fn reduce(ctx: &ZCtx, p: ZTerms, basis: &[&Reducer]) -> (ZTerms, Rational) {
    let mut rest = p;
    let mut remainder: ZTerms = Vec::new();
    let mut start = 0;
    let mut mult = BigInt::one();
    let mut div = BigInt::one();
    let mut steps = 0usize;
    while start < rest.len() {
        let m = &rest[start].0;
        let Some(g) = basis.iter().find(|g| g.lead.divides(m)) else {
            remainder.push(rest[start].clone());
            start += 1;
            continue;
        };
        let c = &rest[start].1;
        let mut h = g.lc.clone();
        c.gcd_into(&mut h);
        let a = &g.lc / &h;
        let b = c.div_exact(&h);
        let shift = g.lead.quotient_of(m).unwrap();
        let a_opt = (!a.is_one()).then_some(&a);
        rest = sub_scaled(ctx, a_opt, &rest[start + 1..], &b, &shift, &g.terms[1..]);
        start = 0;
        if let Some(a) = a_opt {
            for (_, c) in remainder.iter_mut() {
                *c = c.scale(a);
            }
            mult *= a;
        }
        steps += 1;
        if steps.is_multiple_of(8) {
            let mut both: ZTerms = std::mem::take(&mut remainder);
            let split = both.len();
            both.append(&mut rest);
            let g = ctx.make_primitive(&mut both);
            div *= g;
            rest = both.split_off(split);
            remainder = both;
        }
    }
    let g = ctx.make_primitive(&mut remainder);
    div *= g;
    (remainder, Rational::new(mult, div))
}
