//! Residue conditions on the intersection line.

use chowlab_core::coeff::{Field, FieldElement, Rational};
use chowlab_core::curves::{residue, CubicRoots, PointOnLine, RationalFunction, UPoly};
use chowlab_core::rings::{solve_linear, Solution};

use super::ExpError;
use crate::report::{fe, fes, Report, Tag};

/// `z^j`.
fn power(k: &Field, j: usize) -> UPoly {
    let mut c = vec![k.zero(); j + 1];
    c[j] = k.one();
    UPoly::new(k, c)
}

/// `M[i][j] = Res_{P_i} z^j / den dz` for `j < width`.
fn residue_matrix(
    den: &UPoly,
    width: usize,
    points: &[PointOnLine],
) -> Result<Vec<Vec<FieldElement>>, ExpError> {
    let k = den.field();
    points
        .iter()
        .map(|p| {
            (0..width)
                .map(|j| {
                    Ok(residue(
                        &RationalFunction::new(power(k, j), den.clone())?,
                        p,
                    )?)
                })
                .collect()
        })
        .collect()
}

fn column_sums_vanish(m: &[Vec<FieldElement>], k: &Field) -> bool {
    (0..m[0].len()).all(|j| m.iter().fold(k.zero(), |acc, row| &acc + &row[j]).is_zero())
}

fn matrix_strings(m: &[Vec<FieldElement>]) -> Vec<Vec<String>> {
    m.iter().map(fes).collect()
}

pub fn family_system() -> Result<Report, ExpError> {
    let mut report = Report::new("s5-residue-system");
    let u = Rational::zero();
    let roots = CubicRoots::new(u.clone(), "a")?;
    let k = roots.field().clone();
    let [b, a, c] = roots.roots().clone();
    let den = UPoly::new(
        &k,
        vec![
            k.zero(),
            k.one(),
            k.from_rational(u.clone()),
            k.zero(),
            k.one(),
        ],
    );
    let points = [
        PointOnLine::affine(0),
        PointOnLine::Affine(a.clone()),
        PointOnLine::Affine(b.clone()),
        PointOnLine::Affine(c.clone()),
        PointOnLine::Infinity,
    ];
    report.input("u", u.to_string());
    report.input("field_minpoly", "a^2-a+1");
    report.input("form_denominator", den.to_string());
    report.input(
        "ansatz",
        "(a0+a1*z+a2*z^2+a3*z^3)/den dz, (b0+b1*z+b2*z^2+b3*z^3)/den dz",
    );
    report.input(
        "points",
        points.iter().map(ToString::to_string).collect::<Vec<_>>(),
    );
    report.result("roots_abc", fes([&a, &b, &c]));

    let sum = &(&a + &b) + &c;
    let pairs = &(&(&a * &b) + &(&b * &c)) + &(&c * &a);
    let prod = &(&a * &b) * &c;
    report.check_eq(
        "root_relations",
        Tag::Paper,
        [
            "0".to_string(),
            fe(&k.from_rational(u.clone())),
            "-1".to_string(),
        ],
        [fe(&sum), fe(&pairs), fe(&prod)],
    );

    // logarithmic derivatives d(log r)/du = -1/f'(r)
    let derivs = roots.root_derivative()?;
    let (dlog_b, dlog_a) = (derivs[0].clone(), derivs[1].clone());
    let fprime = roots.polynomial().derivative();
    let via_derivative: Vec<String> = [&b, &a, &c]
        .iter()
        .map(|r| Ok(fe(&(-&k.one()).checked_div(&fprime.eval(r))?)))
        .collect::<Result<_, ExpError>>()?;
    let pairwise = |r: &FieldElement, s: &FieldElement, t: &FieldElement| {
        (-&k.one()).checked_div(&(&(r - s) * &(r - t)))
    };
    report.check_eq(
        "implicit_differentiation",
        Tag::Paper,
        [
            fe(&pairwise(&b, &a, &c)?),
            fe(&pairwise(&a, &b, &c)?),
            fe(&pairwise(&c, &a, &b)?),
        ],
        fes(&derivs),
    );
    report.check_eq(
        "log_derivative_via_fprime",
        Tag::Derived,
        via_derivative,
        fes(&derivs),
    );

    let five = k.from_int(5);
    let rhs_u = [
        &five * &(&dlog_b - &dlog_a),
        k.zero(),
        &five * &dlog_a,
        -&(&five * &dlog_b),
        k.zero(),
    ];
    report.result("dlog_phi_du", fes(&rhs_u));

    let m = residue_matrix(&den, 4, &points)?;
    report.result("residue_matrix", matrix_strings(&m));
    let closed_form: Vec<Vec<String>> = points
        .iter()
        .map(|p| {
            (0..4)
                .map(|j| {
                    let v = match p {
                        PointOnLine::Affine(r) if r.is_zero() => {
                            if j == 0 {
                                k.one()
                            } else {
                                k.zero()
                            }
                        }
                        PointOnLine::Affine(r) => {
                            let others: Vec<&FieldElement> =
                                [&a, &b, &c].into_iter().filter(|s| *s != r).collect();
                            let d = &(r * &(r - others[0])) * &(r - others[1]);
                            r.pow(j as i64)?.checked_div(&d)?
                        }
                        PointOnLine::Infinity => {
                            if j == 3 {
                                -&k.one()
                            } else {
                                k.zero()
                            }
                        }
                    };
                    Ok(fe(&v))
                })
                .collect::<Result<Vec<_>, ExpError>>()
        })
        .collect::<Result<_, _>>()?;
    report.check_eq(
        "residue_formulas",
        Tag::Paper,
        closed_form,
        matrix_strings(&m),
    );
    report.check_eq(
        "residue_theorem",
        Tag::Derived,
        true,
        column_sums_vanish(&m, &k),
    );

    // ten equations in a0..a3, b0..b3
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (block, target) in [(0, rhs_u.to_vec()), (4, vec![k.zero(); 5])] {
        for (row, t) in m.iter().zip(target) {
            let mut full = vec![k.zero(); 8];
            full[block..block + 4].clone_from_slice(row);
            rows.push(full);
            rhs.push(t);
        }
    }
    let solution = solve_linear(&rows, &rhs)?;
    let (kind, values) = match &solution {
        Solution::Unique(x) => ("unique", Some(x.clone())),
        Solution::Family { particular, .. } => ("family", Some(particular.clone())),
        Solution::Inconsistent => ("inconsistent", None),
    };
    report.result("system_shape", [rows.len(), 8]);
    report.result("solution_kind", kind);
    report.check_eq("unique_solution", Tag::Paper, "unique", kind);
    let values = values.unwrap_or_else(|| vec![k.zero(); 8]);
    report.result("a", fes(&values[..4]));
    report.result("b", fes(&values[4..]));

    let gen = k.generator().expect("extension generator");
    let third = k.from_rational(Rational::new(-5, 3));
    let expected_a = [
        &third * &(&gen + &k.one()),
        k.zero(),
        &third * &(&(&k.from_int(2) * &gen) - &k.one()),
        k.zero(),
    ];
    report.check_eq("a_values", Tag::Paper, fes(&expected_a), fes(&values[..4]));
    report.check_eq("b_values", Tag::Paper, vec!["0"; 4], fes(&values[4..]));

    // i*sqrt(3) corresponds to 2a - 1
    let s = &(&k.from_int(2) * &gen) - &k.one();
    report.check_eq("sqrt_minus_three", Tag::Derived, "-3", fe(&(&s * &s)));
    let r = |n: i64, d: i64| k.from_rational(Rational::new(n, d));
    let printed = [
        &(&r(-5, 6) * &s) + &r(-5, 2),
        k.zero(),
        &r(-5, 3) * &s,
        k.zero(),
    ];
    report.check_eq(
        "printed_complex_form",
        Tag::Paper,
        fes(&printed),
        fes(&values[..4]),
    );
    report.result("third_root", fe(&c));
    report.result(
        "third_root_note",
        "the third root of z^3+1 next to a and -1 is 1-a, which equals -a^2",
    );
    Ok(report)
}

pub fn torsion_pair() -> Result<Report, ExpError> {
    let mut report = Report::new("s6-residue");
    let k = Field::Rational;
    let den = UPoly::identity(&k);
    let points = [PointOnLine::affine(0), PointOnLine::Infinity];
    let target = [k.from_int(52), k.from_int(-52)];
    report.input("form", "(a0+a1*z+a2*z^2+a3*z^3)/z dz");
    report.input("points", ["0", "inf"]);
    report.input("imposed_residues", fes(&target));

    let m = residue_matrix(&den, 4, &points)?;
    report.result("residue_matrix", matrix_strings(&m));
    report.check_eq(
        "residues_a0_and_minus_a0",
        Tag::Paper,
        [["1", "0", "0", "0"], ["-1", "0", "0", "0"]],
        matrix_strings(&m),
    );
    report.check_eq(
        "residue_theorem",
        Tag::Derived,
        true,
        column_sums_vanish(&m, &k),
    );

    let solution = solve_linear(&m, &target)?;
    let (particular, nullspace) = match solution {
        Solution::Unique(x) => (x, Vec::new()),
        Solution::Family {
            particular,
            nullspace,
        } => (particular, nullspace),
        Solution::Inconsistent => (Vec::new(), Vec::new()),
    };
    report.result("particular_solution", fes(&particular));
    report.result("free_directions", nullspace.len());
    report.check_eq(
        "solution",
        Tag::Paper,
        ["52", "0", "0", "0"],
        fes(&particular),
    );
    let imposed = [k.from_int(52), k.zero(), k.zero(), k.zero()];
    let image: Vec<FieldElement> = m
        .iter()
        .map(|row| {
            row.iter()
                .zip(&imposed)
                .fold(k.zero(), |acc, (x, y)| &acc + &(x * y))
        })
        .collect();
    report.check_eq(
        "imposed_solution_satisfies",
        Tag::Trivial,
        fes(&target),
        fes(&image),
    );
    report.check_eq(
        "a0_is_forced",
        Tag::Derived,
        true,
        nullspace.iter().all(|v| v[0].is_zero()),
    );
    Ok(report)
}
