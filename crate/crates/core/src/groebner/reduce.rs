//! Multivariate division: normal forms and S-polynomials.

use crate::poly::Polynomial;

use super::zpoly::Prepared;

/// Full reduction of `f` by `basis`: no term of the result is divisible by
/// a leading monomial of the basis, and `f - result` lies in the ideal the
/// basis generates. Basis elements need not be monic.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    Prepared::new(f.ring(), basis).normal_form(f)
}

/// `S(f, g) = (L/lt f) f - (L/lt g) g` with `L = lcm(lm f, lm g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (mf, cf) = f.leading_term().expect("nonzero polynomial");
    let (mg, cg) = g.leading_term().expect("nonzero polynomial");
    let l = mf.lcm(mg);
    let a = f.mul_term(&mf.quotient_of(&l).unwrap(), &cf.inv().unwrap());
    let b = g.mul_term(&mg.quotient_of(&l).unwrap(), &cg.inv().unwrap());
    &a - &b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ExtField, Field};
    use crate::poly::{Monomial, MonomialOrder, Ring, RingContext};

    fn ring(order: MonomialOrder) -> Ring {
        RingContext::new(["x", "y", "z"], order, Field::Rational).unwrap()
    }

    #[test]
    fn nf_basic_cases() {
        let r = ring(MonomialOrder::Grevlex);
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        assert!(normal_form(&(&x * &x), std::slice::from_ref(&x)).is_zero());
        // leading term of x^2 - y is x^2, which does not divide y^2
        let g = &(&x * &x) - &y;
        let y2 = &y * &y;
        assert_eq!(normal_form(&y2, &[g]), y2);
    }

    #[test]
    fn nf_remainder_is_irreducible_and_congruent() {
        let r = ring(MonomialOrder::Grevlex);
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let basis = vec![p("2*x*y - z"), p("3*y^2 + x/5")];
        let f = p("x^2*y^2/7 + z*y - 4");
        let nf = normal_form(&f, &basis);
        for (m, _) in nf.terms() {
            for b in &basis {
                assert!(!b.leading_monomial().unwrap().divides(m));
            }
        }
        assert_eq!(normal_form(&nf, &basis), nf);
        // hand division: x^2y^2/7 = (xy/14 + z/28)(2xy - z) + z^2/28
        // and zy, -4 are irreducible
        assert_eq!(nf, p("z^2/28 + y*z - 4"));
    }

    #[test]
    fn nf_over_extension() {
        let k = ExtField::new(crate::coeff::ratpoly::from_ints(&[1, -1, 1]), "a").unwrap();
        let r = RingContext::new(["x", "y"], MonomialOrder::Grevlex, Field::Ext(k)).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        // x ≡ a*y, so x^2 ≡ a^2 y^2 = (a-1) y^2
        let nf = normal_form(&p("x^2"), &[p("(a+1)*x - (a+1)*a*y")]);
        assert_eq!(nf, p("(a-1)*y^2"));
    }

    #[test]
    fn s_polynomial_cancels_leads() {
        let r = ring(MonomialOrder::Lex);
        let x = Polynomial::var(&r, "x").unwrap();
        let y = Polynomial::var(&r, "y").unwrap();
        let f = &(&x * &y) - &y;
        let g = &(&x * &x) - &x;
        let s = s_polynomial(&f, &g);
        let l = Monomial::new(smallvec::smallvec![2, 1, 0]);
        assert!(s.coeff_of(&l).is_zero());
    }
}
