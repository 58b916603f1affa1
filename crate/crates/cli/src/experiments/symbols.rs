//! Tame symbols on the branched covers of the line.

use chowlab_core::coeff::ext::render_ratpoly;
use chowlab_core::coeff::{is_root_of_unity, ratpoly, ExtField, Field, FieldElement, Rational};
use chowlab_core::curves::{
    discriminant, minpoly_of_power, order_at, symbol_tuple, torsion_order, CubicRoots, PointOnLine,
    RationalFunction, UPoly,
};
use chowlab_core::poly::{MonomialOrder, Polynomial, RingContext};
use chowlab_core::rings::{jacob, JacobianKind};

use super::ExpError;
use crate::report::{fe, fes, Report, Tag};

const RAMIFICATION: u32 = 5;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn moebius(
    k: &Field,
    zero: &FieldElement,
    pole: &FieldElement,
) -> Result<RationalFunction, ExpError> {
    Ok(RationalFunction::new(
        UPoly::linear(k, zero),
        UPoly::linear(k, pole),
    )?)
}

fn render_function(f: &RationalFunction) -> String {
    if f.den().degree() == Some(0) {
        f.num().to_string()
    } else {
        format!("({})/({})", f.num(), f.den())
    }
}

fn point_names(points: &[PointOnLine]) -> Vec<String> {
    points.iter().map(ToString::to_string).collect()
}

fn orders(f: &RationalFunction, points: &[PointOnLine]) -> Result<Vec<i64>, ExpError> {
    points.iter().map(|p| Ok(order_at(f, p)?)).collect()
}

/// `x0^5 + x1 x2^4 + x2 x1^4 + x3^5` has only the trivial singular point.
fn fermat_like_quintic_is_smooth(report: &mut Report) -> Result<(), ExpError> {
    let ring = RingContext::new(
        ["w", "x", "y", "z"],
        MonomialOrder::Grevlex,
        Field::Rational,
    )?;
    let form = Polynomial::parse(&ring, "w^5+x*y^4+y*x^4+z^5")?;
    let dim = jacob(&form, JacobianKind::Full)?.krull_dim();
    report.input("quintic", crate::report::poly(&form));
    report.result("jacobian_krull_dim", dim);
    report.check_eq("quintic_smooth", Tag::Paper, 0, dim);
    Ok(())
}

pub fn fermat_pair() -> Result<crate::report::Report, ExpError> {
    let mut report = Report::new("s5-symbols");
    let minpoly = ratpoly::from_ints(&[1, 1, 1]);
    let k = Field::Ext(ExtField::new(minpoly.clone(), "zeta")?);
    let zeta = k.generator().expect("extension generator");
    let zeta2 = &zeta * &zeta;
    let f = RationalFunction::polynomial(UPoly::identity(&k)).with_ramification(RAMIFICATION)?;
    let g = moebius(&k, &k.from_int(-1), &-&zeta2)?.with_ramification(RAMIFICATION)?;
    let points = [
        PointOnLine::affine(0),
        PointOnLine::Infinity,
        PointOnLine::affine(-1),
        PointOnLine::Affine(-&zeta),
        PointOnLine::Affine(-&zeta2),
    ];
    report.input("field_minpoly", render_ratpoly(&minpoly, "zeta"));
    report.input("f", render_function(&f));
    report.input("g", render_function(&g));
    report.input("ramification", RAMIFICATION);
    report.input("points", point_names(&points));

    // the five points are the distinct zeros of z (z^3 + 1) and infinity
    let cubic = UPoly::from_ints(&k, &[1, 0, 0, 1]);
    let affine: Vec<&FieldElement> = points[2..]
        .iter()
        .filter_map(|p| match p {
            PointOnLine::Affine(a) => Some(a),
            PointOnLine::Infinity => None,
        })
        .collect();
    let all_roots = affine.iter().all(|a| cubic.eval(a).is_zero());
    let distinct = affine[0] != affine[1] && affine[1] != affine[2] && affine[0] != affine[2];
    report.check_eq(
        "five_distinct_points",
        Tag::Paper,
        true,
        all_roots && distinct,
    );

    let tuple = symbol_tuple(&f, &g, &points)?;
    let values = tuple.values().to_vec();
    let product = tuple.product();
    let torsion: Vec<Option<u64>> = tuple.torsion_orders();
    report.result("tame_symbol", fes(&values));
    report.result("weil_product", fe(&product));
    report.result("entry_orders", &torsion);
    report.result("div_f", orders(&f, &points)?);
    report.result("div_g", orders(&g, &points)?);
    report.result(
        "convention",
        "computed entries are the inverses of the printed ones, with the fourth and fifth points exchanged",
    );

    report.check_eq("weil_product", Tag::Derived, "1", fe(&product));
    let lcm = torsion
        .iter()
        .try_fold(1u64, |acc, o| o.map(|n| acc / gcd(acc, n) * n));
    report.check_eq("six_torsion", Tag::Paper, Some(6u64), lcm);

    let printed = [
        zeta.pow(5)?,
        k.one(),
        k.from_int(-1),
        -&zeta.pow(-5)?,
        k.one(),
    ];
    let mut normalized = values
        .iter()
        .map(FieldElement::inv)
        .collect::<Result<Vec<_>, _>>()?;
    normalized.swap(3, 4);
    report.check_eq(
        "printed_tuple_up_to_convention",
        Tag::Paper,
        fes(&printed),
        fes(&normalized),
    );
    let mut expected_multiset = fes(&[
        zeta.pow(-5)?,
        k.one(),
        k.from_int(-1),
        -&zeta.pow(5)?,
        k.one(),
    ]);
    let mut computed_multiset = fes(&values);
    expected_multiset.sort();
    computed_multiset.sort();
    report.check_eq(
        "entry_multiset",
        Tag::Paper,
        expected_multiset,
        computed_multiset,
    );

    report.check_eq("div_f", Tag::Paper, [5, -5, 0, 0, 0], orders(&f, &points)?);
    let g_at = |p: &PointOnLine| g.value_at(p).map(|v| v.map(|x| fe(&x)));
    report.check_eq(
        "g_at_first_points",
        Tag::Paper,
        [Some(fe(&zeta)), Some("1".to_string())],
        [g_at(&points[0])?, g_at(&points[1])?],
    );
    let f_at = |p: &PointOnLine| f.value_at(p).map(|v| v.map(|x| fe(&x)));
    report.check_eq(
        "f_at_third_and_fourth_points",
        Tag::Paper,
        [Some("-1".to_string()), Some(fe(&-&zeta))],
        [f_at(&points[2])?, f_at(&points[3])?],
    );
    report.check_eq(
        "div_g_degree",
        Tag::Trivial,
        0,
        orders(&g, &points)?.iter().sum::<i64>(),
    );
    fermat_like_quintic_is_smooth(&mut report)?;
    Ok(report)
}

pub fn family() -> Result<Report, ExpError> {
    let mut report = Report::new("s5-family-symbols");
    report.input("cubic", "z^3+u*z+1");
    report.input("f", "z");
    report.input("g", "(z-alpha)/(z-beta)");
    report.input("ramification", RAMIFICATION);
    report.input("u_values", [0, 1]);

    // u = 0: the roots split over Q[a]/(a^2 - a + 1)
    let roots = CubicRoots::new(Rational::zero(), "a")?;
    let k = roots.field().clone();
    let [beta, alpha, gamma] = roots.roots().clone();
    let f = RationalFunction::polynomial(UPoly::identity(&k)).with_ramification(RAMIFICATION)?;
    let g = moebius(&k, &alpha, &beta)?.with_ramification(RAMIFICATION)?;
    let points = [
        PointOnLine::affine(0),
        PointOnLine::Infinity,
        PointOnLine::Affine(alpha.clone()),
        PointOnLine::Affine(beta.clone()),
        PointOnLine::Affine(gamma.clone()),
    ];
    let tuple = symbol_tuple(&f, &g, &points)?;
    report.result("u0_field_minpoly", "a^2-a+1");
    report.result("u0_roots", fes([&alpha, &beta, &gamma]));
    report.result("u0_points", point_names(&points));
    report.result("u0_tame_symbol", fes(tuple.values()));
    report.result("u0_entry_orders", tuple.torsion_orders());

    report.check_eq(
        "u0_root_relations",
        Tag::Paper,
        true,
        roots.relations_hold(),
    );
    let closed_form = [
        beta.checked_div(&alpha)?.pow(5)?,
        k.one(),
        alpha.pow(5)?,
        beta.pow(-5)?,
        k.one(),
    ];
    report.check_eq(
        "u0_closed_form",
        Tag::Paper,
        fes(&closed_form),
        fes(tuple.values()),
    );
    report.check_eq("u0_weil_product", Tag::Derived, "1", fe(&tuple.product()));
    let cyclotomic: Vec<bool> = tuple
        .values()
        .iter()
        .map(|x| is_root_of_unity(&x.minimal_polynomial()).map(|o| o.is_some()))
        .collect::<Result<_, _>>()?;
    report.check_eq("u0_all_entries_torsion", Tag::Paper, [true; 5], cyclotomic);

    // the characteristic polynomial of z^5 has the fifth powers of the roots
    let charpoly0 = minpoly_of_power(&Rational::zero(), RAMIFICATION)?;
    let direct = [&alpha, &beta, &gamma]
        .into_iter()
        .try_fold(UPoly::one(&k), |acc, r| {
            Ok::<_, ExpError>(acc.mul(&UPoly::linear(&k, &r.pow(5)?)))
        })?;
    let lifted: Vec<String> = charpoly0
        .iter()
        .map(|c| fe(&k.from_rational(c.clone())))
        .collect();
    report.check_eq(
        "u0_power_charpoly",
        Tag::Derived,
        lifted,
        fes(direct.coeffs()),
    );
    report.check_eq(
        "u0_torsion_orders_defined",
        Tag::Derived,
        true,
        tuple.values().iter().all(|x| torsion_order(x).is_some()),
    );

    // u = 1: the discriminant is not a square, alpha^5 is not a root of unity
    let u1 = Rational::one();
    let charpoly1 = minpoly_of_power(&u1, RAMIFICATION)?;
    let order = is_root_of_unity(&charpoly1)?;
    let rational_roots = ratpoly::rational_roots(&charpoly1);
    report.result("u1_discriminant", discriminant(&u1).to_string());
    report.result("u1_alpha5_minpoly", render_ratpoly(&charpoly1, "t"));
    report.check_eq(
        "u1_discriminant",
        Tag::Trivial,
        "-31",
        discriminant(&u1).to_string(),
    );
    report.check_eq(
        "u1_minpoly_irreducible",
        Tag::Derived,
        0,
        rational_roots.len(),
    );
    report.check_eq("u1_entry_not_torsion", Tag::Paper, None::<u64>, order);
    Ok(report)
}
