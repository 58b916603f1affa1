//! Tangent-space dimensions for a bielliptic plane quartic.

use chowlab_core::coeff::Field;
use chowlab_core::poly::{MonomialOrder, Polynomial, Ring, RingContext};
use chowlab_core::rings::{
    graded_dim, hilbert_function, intersection_dim, jacob, quotient_basis_check, Echelon,
    JacobianKind,
};

use super::{oracle_disagreements, ExpError};
use crate::report::{poly, polys, Report, Tag};

fn rank(ring: &Ring, rows: &[Polynomial]) -> usize {
    let mut e = Echelon::new(ring);
    for p in rows {
        e.insert(p);
    }
    e.rank()
}

/// The bielliptic quartic `F` and its ring.
pub(crate) fn quartic() -> Result<(Ring, Polynomial), ExpError> {
    let r = RingContext::new(["x", "y", "z"], MonomialOrder::Grevlex, Field::Rational)?;
    let f = Polynomial::parse(&r, "y^4+x*z*y^2+x^4-z^4")?;
    Ok((r, f))
}

pub fn dims() -> Result<Report, ExpError> {
    let mut report = Report::new("s7-dims");
    let (r, f) = quartic()?;
    let parse = |t: &str| Polynomial::parse(&r, t);
    report.input("ring", "Q[x,y,z], grevlex");
    report.input("F", poly(&f));

    // quartics A(x,z) y^2 + B(x,z)
    let biquadratic = [
        "x^2*y^2", "x*z*y^2", "z^2*y^2", "x^4", "x^3*z", "x^2*z^2", "x*z^3", "z^4",
    ]
    .iter()
    .map(|t| parse(t))
    .collect::<Result<Vec<_>, _>>()?;
    let (fx, fz) = (f.diff("x")?, f.diff("z")?);
    let relations: Vec<Polynomial> = ["x", "y", "z"]
        .iter()
        .flat_map(|v| [(v, &fx), (v, &fz)])
        .map(|(v, g)| Ok(&Polynomial::var(&r, v)? * g))
        .collect::<Result<_, ExpError>>()?;
    let in_both = intersection_dim(&r, &biquadratic, &relations);
    let tb = biquadratic.len() - in_both;
    report.input("TB_ambient", polys(&biquadratic));
    report.result("TB_relations", polys(&relations));
    report.result("TB_relations_in_ambient", in_both);
    report.check_eq("TB_dimension", Tag::Paper, 4, tb);

    let tb_basis = ["x^4", "x^3*z", "x^2*z^2", "x*z^3"]
        .iter()
        .map(|t| parse(t))
        .collect::<Result<Vec<_>, _>>()?;
    let mut stacked = relations.clone();
    stacked.extend(tb_basis.iter().cloned());
    let independent = rank(&r, &stacked) - rank(&r, &relations);
    report.check_eq("TB_basis", Tag::Paper, tb_basis.len(), independent);

    let jac = jacob(&f, JacobianKind::Full)?;
    let r4 = graded_dim(&jac, 4)?;
    report.result(
        "R4_standard_monomials",
        polys(
            &r4.standard_monomials
                .iter()
                .map(|m| Polynomial::monomial(&r, m.clone(), r.field().one()))
                .collect::<Vec<_>>(),
        ),
    );
    report.check_eq("R4_dimension", Tag::Paper, 6, r4.dim_quotient);
    let r4_basis = ["x^2*z*y", "x*z^2*y", "x^4", "x^3*z", "x^2*z^2", "x*z^3"]
        .iter()
        .map(|t| parse(t))
        .collect::<Result<Vec<_>, _>>()?;
    report.check_eq(
        "R4_basis",
        Tag::Paper,
        true,
        quotient_basis_check(&jac, 4, &r4_basis)?,
    );

    report.check_eq("quartic_smooth", Tag::Derived, 0, jac.krull_dim());
    let h = hilbert_function(&jac, 7)?;
    report.result("hilbert_R", &h);
    // a smooth plane quartic has Hilbert series (1+t+t^2)^3
    report.check_eq(
        "hilbert_series_of_smooth_quartic",
        Tag::Derived,
        [1, 3, 6, 7, 6, 3, 1, 0],
        h,
    );
    report.check_eq(
        "oracle_agreement_jacobian",
        Tag::Derived,
        Vec::<u64>::new(),
        oracle_disagreements(&jac, 12)?,
    );
    Ok(report)
}
