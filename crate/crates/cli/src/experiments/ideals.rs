//! Jacobian-ring ideals, their intersections and Hilbert functions.

use chowlab_core::coeff::{ratpoly, ExtField, Field};
use chowlab_core::dsl::{hilbert_table, jacobian_ideal};
use chowlab_core::groebner::{intersect, normal_form, Ideal};
use chowlab_core::poly::{MonomialOrder, Polynomial, Ring, RingContext};
use chowlab_core::rings::{jacob, mingens_degrees, JacobianKind, MinGens};

use super::{intersection_disagreements, oracle_disagreements, ExpError};
use crate::report::{poly, polys, Report, Tag};

const ORACLE_DEGREE: u64 = 12;
const SEPARATION_DEGREE: u64 = 8;

fn ring(field: Field) -> Result<Ring, ExpError> {
    Ok(RingContext::new(
        ["w", "x", "y", "z"],
        MonomialOrder::Grevlex,
        field,
    )?)
}

fn parse_all(ring: &Ring, texts: &[&str]) -> Result<Vec<Polynomial>, ExpError> {
    texts
        .iter()
        .map(|t| Ok(Polynomial::parse(ring, t)?))
        .collect()
}

/// `[(degree, count)]` for the nonzero entries.
fn degree_table(table: &[MinGens]) -> Vec<(u64, usize)> {
    table
        .iter()
        .filter(|m| m.count > 0)
        .map(|m| (m.degree, m.count))
        .collect()
}

fn counts_up_to(table: &[MinGens], top: u64) -> Vec<usize> {
    table
        .iter()
        .filter(|m| m.degree <= top)
        .map(|m| m.count)
        .collect()
}

fn contained(gens: &[Polynomial], ideal: &Ideal) -> bool {
    gens.iter().all(|g| ideal.contains(g))
}

/// Same polynomial after making both monic.
fn proportional(p: &Polynomial, q: &Polynomial) -> bool {
    p.make_monic() == q.make_monic()
}

const KERNEL_K: &str = "w^2*x+w*x*y+w*y^2+y^3+w*x*z";
const KERNEL_UV: (i64, i64) = (1, 1);

/// Generators of `I` and `J` for the two-parameter quintic family.
pub(crate) fn kernel_generators() -> Result<(Ring, Vec<Polynomial>, Vec<Polynomial>), ExpError> {
    let r = ring(Field::Rational)?;
    let k = Polynomial::parse(&r, KERNEL_K)?;
    let (u, v) = KERNEL_UV;
    let var = |name: &str| Polynomial::var(&r, name);
    let (w, x, y, z) = (var("w")?, var("x")?, var("y")?, var("z")?);
    let c = |n: i64| Polynomial::constant(&r, r.field().from_int(n));
    let wz = &w * &z;
    let f1 = &(&(&c(5) * &w.pow(5)) + &(&wz * &k)) + &(&(&w * &wz) * &k.diff("w")?);
    let f2 = &(&(&y.pow(4) + &(&c(4) * &(&x.pow(3) * &y))) + &(&c(2 * u) * &(&x * &y.pow(3))))
        + &(&(&c(v) * &wz) * &k.diff("x")?);
    let f3 = &(&(&x.pow(4) + &(&c(4) * &(&x * &y.pow(3))))
        + &(&c(3 * u) * &(&x.pow(2) * &y.pow(2))))
        + &(&(&c(v) * &wz) * &k.diff("y")?);
    let f4 = &(&(&c(5) * &z.pow(5)) + &(&wz * &k)) + &(&(&wz * &z) * &k.diff("z")?);
    let j_texts = [
        "y^3*z*w",
        "x*y^2*z*w",
        "x^2*y*w*z",
        "w^2*z",
        "w*z^2",
        "x^2*y^3*w",
        "x^2*y^3*z",
    ];
    let mut jgens = parse_all(&r, &j_texts)?;
    for g in jgens.iter_mut().take(5) {
        *g = &*g * &k;
    }
    Ok((r, vec![f1, f2, f3, f4], jgens))
}

pub fn kernel_intersection() -> Result<Report, ExpError> {
    let mut report = Report::new("s5-ideal");
    let (r, gens, jgens) = kernel_generators()?;
    let k_text = KERNEL_K;
    let (u, v) = KERNEL_UV;
    report.input("ring", "Q[w,x,y,z], grevlex");
    report.input("K", poly(&Polynomial::parse(&r, k_text)?));
    report.input("u", u);
    report.input("v", v);
    report.input("I_generators", polys(&gens));

    let form = Polynomial::parse(
        &r,
        &format!("w^5+x*y^4+y*x^4+z^5+{u}*x^2*y^3+{v}*w*z*({k_text})"),
    )?;
    let modified = jacob(&form, JacobianKind::Modified)?;
    report.check_eq(
        "generators_are_modified_jacobian",
        Tag::Derived,
        polys(modified.generators()),
        polys(&gens),
    );

    report.input("J_generators", polys(&jgens));
    let i = Ideal::new(&r, gens)?;
    let j = Ideal::new(&r, jgens)?;
    let meet = intersect(&i, &j)?;
    let table = mingens_degrees(&meet, meet.max_generator_degree())?;
    report.result("intersection_basis_size", meet.generators().len());
    report.result("intersection_krull_dim", meet.krull_dim());
    report.result("I_krull_dim", i.krull_dim());
    report.result("minimal_generator_degrees", degree_table(&table));

    report.check_eq(
        "no_minimal_generators_up_to_degree_8",
        Tag::Paper,
        vec![0usize; SEPARATION_DEGREE as usize + 1],
        counts_up_to(&table, SEPARATION_DEGREE),
    );
    let lowest = table.iter().find(|m| m.count > 0).map(|m| m.degree);
    report.check(
        "lowest_generator_degree_at_least_9",
        Tag::Paper,
        ">= 9",
        lowest,
        lowest.is_some_and(|d| d >= 9),
    );
    report.check_eq(
        "intersection_in_both_ideals",
        Tag::Derived,
        true,
        contained(meet.generators(), &i) && contained(meet.generators(), &j),
    );
    report.check_eq(
        "oracle_agreement_I",
        Tag::Derived,
        Vec::<u64>::new(),
        oracle_disagreements(&i, ORACLE_DEGREE)?,
    );
    report.check_eq(
        "oracle_agreement_J",
        Tag::Derived,
        Vec::<u64>::new(),
        oracle_disagreements(&j, ORACLE_DEGREE)?,
    );
    report.check_eq(
        "oracle_agreement_intersection",
        Tag::Derived,
        Vec::<u64>::new(),
        intersection_disagreements(&meet, &i, &j, ORACLE_DEGREE)?,
    );
    Ok(report)
}

/// The quintic over `Q(a)` with its perturbing factors `K`, `P`, `N`.
pub(crate) struct HilbertSetup {
    pub ring: Ring,
    pub k: Polynomial,
    pub p: Polynomial,
    pub n: Polynomial,
    pub f: Polynomial,
}

pub(crate) fn hilbert_setup() -> Result<HilbertSetup, ExpError> {
    let field = Field::Ext(ExtField::new(ratpoly::from_ints(&[1, -1, 1]), "a")?);
    let r = ring(field)?;
    let k_text = KERNEL_K;
    Ok(HilbertSetup {
        k: Polynomial::parse(&r, k_text)?,
        p: Polynomial::parse(&r, "(a+1)*y^3+a*(1+a)*x^2*y")?,
        n: Polynomial::parse(&r, &format!("z*w*({k_text})"))?,
        f: Polynomial::parse(&r, &format!("w^5+z^5+x*y^4+x^4*y+z*w*({k_text})"))?,
        ring: r,
    })
}

/// The Jacobian ideal of the quintic and its extension by `N P K`.
pub(crate) fn hilbert_ideals(s: &HilbertSetup) -> Result<(Ideal, Ideal, Polynomial), ExpError> {
    let jac = jacobian_ideal(&s.f)?;
    let npk = &(&s.n * &s.p) * &s.k;
    let mut gens = jac.generators().to_vec();
    gens.push(npk.clone());
    let extended = Ideal::new(&s.ring, gens)?;
    Ok((jac, extended, npk))
}

pub fn hilbert_comparison() -> Result<Report, ExpError> {
    let mut report = Report::new("s5-hilbert");
    let setup = hilbert_setup()?;
    report.input("ring", "Q(a)[w,x,y,z], a^2-a+1=0, grevlex");
    report.input("K", poly(&setup.k));
    report.input("P", poly(&setup.p));
    report.input("N", poly(&setup.n));
    report.input("F", poly(&setup.f));

    let (jac, extended, npk) = hilbert_ideals(&setup)?;
    let (h_r, complete_r) = hilbert_table(&jac)?;
    let (h_q, complete_q) = hilbert_table(&extended)?;
    report.result("hilbert_R", &h_r);
    report.result("hilbert_R_mod_NPK", &h_q);
    report.result("NPK_degree", npk.total_degree());

    let at = |h: &[u64], d: usize| h.get(d).copied().unwrap_or(0);
    report.check_eq(
        "jacobian_zero_dimensional",
        Tag::Derived,
        [true, true],
        [complete_r, complete_q],
    );
    report.check_eq("dim_R11", Tag::Derived, 4, at(&h_r, 11));
    report.check_eq(
        "degree_11_difference",
        Tag::Paper,
        1,
        at(&h_r, 11) as i64 - at(&h_q, 11) as i64,
    );
    let nf = normal_form(&npk, jac.groebner_basis());
    report.check_eq("NPK_nonzero_in_R", Tag::Derived, false, nf.is_zero());
    // a smooth quintic surface has Hilbert series (1+t+t^2+t^3)^4
    let expected: Vec<u64> = vec![1, 4, 10, 20, 31, 40, 44, 40, 31, 20, 10, 4, 1, 0];
    report.check_eq(
        "hilbert_series_of_smooth_quintic",
        Tag::Derived,
        expected,
        &h_r,
    );
    report.check_eq(
        "oracle_agreement_jacobian",
        Tag::Derived,
        Vec::<u64>::new(),
        oracle_disagreements(&jac, ORACLE_DEGREE)?,
    );
    Ok(report)
}

const TORSION_U: i64 = 0;

/// Generators of `I` and `J` for the quintic with torsion symbol.
pub(crate) fn torsion_generators() -> Result<(Ring, Vec<Polynomial>, Vec<Polynomial>), ExpError> {
    let r = ring(Field::Rational)?;
    let u = TORSION_U;
    let gens = parse_all(
        &r,
        &[
            "w*x^4+4*w^4*y",
            &format!("4*x^3*w+y^4+4*{u}*x^3*z"),
            "4*x*y^3+w^4",
            "5*z^5+4*x^4*z",
        ],
    )?;
    let jgens = parse_all(&r, &["52*x^4*y^3*z", "w*x^4*z", "x^4*z^2"])?;
    Ok((r, gens, jgens))
}

pub fn torsion_intersection() -> Result<Report, ExpError> {
    let mut report = Report::new("s6-ideal");
    let (r, gens, jgens) = torsion_generators()?;
    let u = TORSION_U;
    report.input("ring", "Q[w,x,y,z], grevlex");
    report.input("u", u);
    report.input("I_generators", polys(&gens));
    report.input("J_generators", polys(&jgens));

    // the session's fourth generator against z * dF/dz
    let form = Polynomial::parse(&r, &format!("w*x^4+x*y^4+y*w^4+z^5+{u}*z*x^4"))?;
    let modified = jacob(&form, JacobianKind::Modified)?;
    let gap = &gens[3] - &modified.generators()[3];
    report.result("fourth_generator_minus_z_dF_dz", poly(&gap));
    report.check_eq(
        "first_three_generators_are_modified_jacobian",
        Tag::Derived,
        polys(&modified.generators()[..3]),
        polys(&gens[..3]),
    );

    let i = Ideal::new(&r, gens)?;
    let j = Ideal::new(&r, jgens)?;
    let meet = intersect(&i, &j)?;
    let top = meet.max_generator_degree().max(SEPARATION_DEGREE);
    let table = mingens_degrees(&meet, top)?;
    report.result("intersection_basis", polys(meet.generators()));
    report.result("intersection_krull_dim", meet.krull_dim());
    report.result("minimal_generator_degrees", degree_table(&table));

    let sixes = &table[6].generators;
    report.check_eq("one_generator_in_degree_6", Tag::Paper, 1, sixes.len());
    let target = Polynomial::parse(&r, "w*x^4*z")?;
    report.check_eq(
        "degree_6_generator_is_w_x4_z",
        Tag::Paper,
        true,
        sixes.len() == 1 && proportional(&sixes[0], &target),
    );
    report.check_eq(
        "none_in_degrees_7_8",
        Tag::Paper,
        [0usize, 0],
        [table[7].count, table[8].count],
    );
    report.check_eq(
        "intersection_in_both_ideals",
        Tag::Derived,
        true,
        contained(meet.generators(), &i) && contained(meet.generators(), &j),
    );
    report.check_eq(
        "oracle_agreement_I",
        Tag::Derived,
        Vec::<u64>::new(),
        oracle_disagreements(&i, ORACLE_DEGREE)?,
    );
    report.check_eq(
        "oracle_agreement_intersection",
        Tag::Derived,
        Vec::<u64>::new(),
        intersection_disagreements(&meet, &i, &j, ORACLE_DEGREE)?,
    );

    // the single generator x^4 z named in the prose
    let prose = Ideal::new(&r, vec![Polynomial::parse(&r, "x^4*z")?])?;
    let prose_meet = intersect(&i, &prose)?;
    let prose_table = mingens_degrees(&prose_meet, prose_meet.max_generator_degree())?;
    report.result(
        "prose_J_minimal_generator_degrees",
        degree_table(&prose_table),
    );
    report.result(
        "prose_J_degree_6_generators",
        polys(prose_table.get(6).map_or(&[][..], |m| &m.generators)),
    );
    Ok(report)
}
