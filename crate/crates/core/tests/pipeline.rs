//! Cross-module use of the public API: parsing, Gröbner bases, graded
//! quotients and the script interpreter.

use chowlab_core::coeff::Field;
use chowlab_core::dsl;
use chowlab_core::groebner::{intersect, Ideal};
use chowlab_core::poly::{MonomialOrder, Polynomial, Ring, RingContext};
use chowlab_core::rings::{
    hilbert_function, jacob, linalg_oracle, linalg_oracle_intersection, JacobianKind,
};

fn ring(vars: &[&str]) -> Ring {
    RingContext::new(vars.to_vec(), MonomialOrder::Grevlex, Field::Rational).unwrap()
}

fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
    let gens = gens
        .iter()
        .map(|g| Polynomial::parse(r, g).unwrap())
        .collect();
    Ideal::new(r, gens).unwrap()
}

#[test]
fn smooth_cubic_surface_has_gorenstein_jacobian_ring() {
    let r = ring(&["w", "x", "y", "z"]);
    let f = Polynomial::parse(&r, "w^3+x^3+y^3+z^3+w*x*y").unwrap();
    let jac = jacob(&f, JacobianKind::Full).unwrap();
    assert_eq!(jac.krull_dim(), 0);
    let h = hilbert_function(&jac, 5).unwrap();
    // (1+t)^4
    assert_eq!(h, vec![1, 4, 6, 4, 1, 0]);
    for (d, &v) in h.iter().enumerate() {
        assert_eq!(linalg_oracle(&jac, d as u64).unwrap(), v);
    }
}

#[test]
fn intersection_of_coordinate_ideals() {
    let r = ring(&["x", "y", "z"]);
    let i = ideal(&r, &["x", "y"]);
    let j = ideal(&r, &["y", "z"]);
    let meet = intersect(&i, &j).unwrap();
    assert!(meet.contains(&Polynomial::parse(&r, "x*z").unwrap()));
    assert!(meet.contains(&Polynomial::parse(&r, "y").unwrap()));
    assert!(!meet.contains(&Polynomial::parse(&r, "x").unwrap()));
    let h = hilbert_function(&meet, 4).unwrap();
    for (d, &v) in h.iter().enumerate() {
        assert_eq!(linalg_oracle_intersection(&i, &j, d as u64).unwrap(), v);
    }
}

#[test]
fn script_agrees_with_library() {
    let out = dsl::run(
        "ring r = 0, (w,x,y,z), dp;\n\
         poly F = w3+x3+y3+z3+wxy;\n\
         ideal J = jacob(F);\n\
         dim(std(J));\n",
    )
    .unwrap();
    assert_eq!(out.trim(), "0");
}

#[test]
fn script_errors_are_classified() {
    let parse = dsl::run("ring r = 0, (x), dp;\npoly f = ;\n").unwrap_err();
    assert!(parse.is_parse_error());
    assert_eq!(parse.pos().line, 2);
    let eval = dsl::run("ring r = 0, (x), dp;\npoly f = y;\n").unwrap_err();
    assert!(!eval.is_parse_error());
}
