use proptest::prelude::*;

use super::*;
use crate::coeff::Field;
use crate::poly::{MonomialOrder, RingContext};

fn ring(vars: &[&str], order: MonomialOrder) -> Ring {
    RingContext::new(vars.iter().copied(), order, Field::Rational).unwrap()
}

fn wxyz() -> Ring {
    ring(&["w", "x", "y", "z"], MonomialOrder::Grevlex)
}

fn p(r: &Ring, s: &str) -> Polynomial {
    Polynomial::parse(r, s).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    Ideal::new(r, gens.iter().map(|s| p(r, s)).collect()).unwrap()
}

fn rendered(basis: &[Polynomial]) -> Vec<String> {
    basis.iter().map(Polynomial::render).collect()
}

fn full_jacobian(f: &Polynomial) -> Vec<Polynomial> {
    (0..f.ring().nvars()).map(|i| f.diff_at(i)).collect()
}

const CUBIC: &str = "w^2*x+w*x*y+w*y^2+y^3+w*x*z";

#[test]
fn linear_triangularization() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Lex);
    let gb = buchberger(&[p(&r, "x-y"), p(&r, "y-z")]);
    assert_eq!(rendered(&gb), ["x-z", "y-z"]);
}

#[test]
fn fermat_jacobian_basis() {
    let r = wxyz();
    let f = p(&r, "w^5+x^5+y^5+z^5");
    let gb = buchberger(&full_jacobian(&f));
    assert_eq!(rendered(&gb), ["w^4", "x^4", "y^4", "z^4"]);
}

#[test]
fn euler_identity_membership() {
    let r = wxyz();
    let f = p(&r, &format!("w^5+x*y^4+y*x^4+z^5+x^2*y^3+w*z*({CUBIC})"));
    let jac = Ideal::new(&r, full_jacobian(&f)).unwrap();
    assert!(normal_form(&f, jac.groebner_basis()).is_zero());
    assert!(jac.contains(&f));
    let gb = jac.groebner_basis();
    assert!(is_groebner_basis(gb));
    assert!(is_reduced(gb));
}

#[test]
fn unit_not_in_maximal_ideal() {
    let r = wxyz();
    let m = ideal(&r, &["w", "x", "y", "z"]);
    assert!(!m.contains(&Polynomial::one(&r)));
    assert_eq!(m.krull_dim(), 0);
    assert_eq!(ideal(&r, &["x"]).krull_dim(), 3);
    assert_eq!(ideal(&r, &["x-1", "x"]).krull_dim(), -1);
}

#[test]
fn smooth_quintic_has_zero_dimensional_jacobian() {
    let r = wxyz();
    let f = p(&r, "w^5+x*y^4+y*x^4+z^5");
    let jac = Ideal::new(&r, full_jacobian(&f)).unwrap();
    assert_eq!(jac.krull_dim(), 0);
}

#[test]
fn elimination_examples() {
    let r = ring(&["t", "x", "y"], MonomialOrder::Grevlex);
    let i = ideal(&r, &["t*x-1", "t*y-1"]);
    let e = eliminate(&i, 1);
    assert_eq!(rendered(e.generators()), ["x-y"]);
    // both inclusions: x-y lies in I, and I ∩ Q[x,y] is principal
    assert!(i.contains(&p(&r, "x-y")));

    let e0 = eliminate(&i, 0);
    assert_eq!(e0.generators(), i.groebner_basis());

    let j = ideal(&r, &["t", "x"]);
    assert_eq!(rendered(eliminate(&j, 1).generators()), ["x"]);
}

#[test]
fn intersection_examples() {
    let r = ring(&["x", "y", "z"], MonomialOrder::Grevlex);
    let xy = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"])).unwrap();
    assert_eq!(rendered(xy.generators()), ["x*y"]);
    let m = intersect(&ideal(&r, &["x^2*y"]), &ideal(&r, &["x*y^3*z"])).unwrap();
    assert_eq!(rendered(m.generators()), ["x^2*y^3*z"]);
    let mixed = ring(&["x", "y", "z"], MonomialOrder::Lex);
    assert!(matches!(
        intersect(&ideal(&r, &["x"]), &ideal(&mixed, &["y"])),
        Err(GroebnerError::MixedRings)
    ));
}

#[test]
fn jacobian_of_family_member_passes_spair_check() {
    let r = wxyz();
    let f = p(&r, &format!("w^5+x*y^4+y*x^4+z^5+x^2*y^3+w*z*({CUBIC})"));
    let gb = buchberger(&full_jacobian(&f));
    assert!(is_groebner_basis(&gb));
    assert_eq!(Ideal::new(&r, gb).unwrap().krull_dim(), 0);
}

#[test]
fn cache_is_filled_once() {
    let r = wxyz();
    let i = ideal(&r, &["w^2-x*y", "x^3"]);
    assert!(!i.has_cached_basis());
    let a = i.groebner_basis().as_ptr();
    let b = i.groebner_basis().as_ptr();
    assert_eq!(a, b);
    assert!(i.clone().has_cached_basis());
}

/// Sparse polynomials of total degree at most 3 with small coefficients.
fn small_poly(r: Ring) -> impl Strategy<Value = Polynomial> {
    let n = r.nvars();
    proptest::collection::vec((proptest::collection::vec(0u32..3, n), -3i64..4), 1..4)
        .prop_map(move |terms| {
            terms
                .into_iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= 3)
                .fold(Polynomial::zero(&r), |acc, (e, c)| {
                    let m = crate::poly::Monomial::new(e);
                    &acc + &Polynomial::monomial(&r, m, r.field().from_int(c))
                })
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn xyz() -> Ring {
    ring(&["x", "y", "z"], MonomialOrder::Grevlex)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, ..ProptestConfig::default() })]

    #[test]
    fn reduced_basis_is_canonical(gens in proptest::collection::vec(small_poly(xyz()), 1..3)) {
        let a = buchberger(&gens);
        let mut rev = gens.clone();
        rev.reverse();
        let b = buchberger(&rev);
        prop_assert_eq!(&a, &b);
        prop_assert!(is_groebner_basis(&a));
        prop_assert!(is_reduced(&a));
        for g in &gens {
            prop_assert!(normal_form(g, &a).is_zero());
        }
    }

    #[test]
    fn normal_form_is_idempotent(
        gens in proptest::collection::vec(small_poly(xyz()), 1..3),
        f in small_poly(xyz()),
    ) {
        let gb = buchberger(&gens);
        let nf = normal_form(&f, &gb);
        prop_assert_eq!(normal_form(&nf, &gb), nf.clone());
        // f - NF(f) lies in the ideal
        prop_assert!(normal_form(&(&f - &nf), &gb).is_zero());
    }

    #[test]
    fn intersection_sits_between_product_and_both(
        a in proptest::collection::vec(small_poly(xyz()), 1..3),
        b in proptest::collection::vec(small_poly(xyz()), 1..3),
    ) {
        let r = xyz();
        let i = Ideal::new(&r, a.clone()).unwrap();
        let j = Ideal::new(&r, b.clone()).unwrap();
        let k = intersect(&i, &j).unwrap();
        for g in k.generators() {
            prop_assert!(i.contains(g) && j.contains(g));
        }
        for f in &a {
            for g in &b {
                prop_assert!(k.contains(&(f * g)));
            }
        }
    }

    #[test]
    fn extra_generator_never_raises_dimension(
        a in proptest::collection::vec(small_poly(xyz()), 1..3),
        extra in small_poly(xyz()),
    ) {
        let r = xyz();
        let i = Ideal::new(&r, a.clone()).unwrap();
        let mut more = a;
        more.push(extra);
        let j = Ideal::new(&r, more).unwrap();
        prop_assert!(j.krull_dim() <= i.krull_dim());
    }
}
