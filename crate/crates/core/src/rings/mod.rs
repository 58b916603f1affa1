//! Jacobian rings, graded pieces of homogeneous quotients, and the linear
//! algebra used to measure them.

pub mod linalg;
mod modular;

use thiserror::Error;

use crate::groebner::{minimal_generators, normal_form, GroebnerError, Ideal};
use crate::poly::{graded_piece_basis, Monomial, Polynomial, Ring};

pub use linalg::{bareiss_rank, solve_linear, Echelon, Solution};
pub use modular::exact_rank;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingsError {
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("the modified Jacobian ideal needs exactly 4 variables, got {0}")]
    NeedsFourVariables(usize),
    #[error("expected degree {expected}, got {found}")]
    DegreeMismatch { expected: u64, found: i64 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JacobianKind {
    /// all partial derivatives
    Full,
    /// `(x0·∂0, ∂1, ∂2, x3·∂3)`
    Modified,
}

/// A homogeneous form together with one of its Jacobian ideals.
#[derive(Debug, Clone)]
pub struct JacobianRing {
    pub kind: JacobianKind,
    pub form: Polynomial,
    pub ideal: Ideal,
}

impl JacobianRing {
    pub fn new(form: &Polynomial, kind: JacobianKind) -> Result<Self, RingsError> {
        Ok(JacobianRing {
            kind,
            form: form.clone(),
            ideal: jacob(form, kind)?,
        })
    }
}

fn require_homogeneous(p: &Polynomial) -> Result<(), RingsError> {
    match p.is_homogeneous() {
        Some(_) => Ok(()),
        None => Err(RingsError::NotHomogeneous(p.render())),
    }
}

/// Jacobian ideal of a homogeneous form. Generators keep the variable order.
pub fn jacob(form: &Polynomial, kind: JacobianKind) -> Result<Ideal, RingsError> {
    require_homogeneous(form)?;
    let ring = form.ring();
    let n = ring.nvars();
    let gens = match kind {
        JacobianKind::Full => (0..n).map(|i| form.diff_at(i)).collect(),
        JacobianKind::Modified => {
            if n != 4 {
                return Err(RingsError::NeedsFourVariables(n));
            }
            let first = Polynomial::var_at(ring, 0);
            let last = Polynomial::var_at(ring, 3);
            vec![
                &first * &form.diff_at(0),
                form.diff_at(1),
                form.diff_at(2),
                &last * &form.diff_at(3),
            ]
        }
    };
    Ok(Ideal::new(ring, gens)?)
}

/// `dim (B/I)_d` with its standard-monomial basis (descending order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedReport {
    pub degree: u64,
    pub dim_quotient: u64,
    pub standard_monomials: Vec<Monomial>,
}

fn require_homogeneous_ideal(ideal: &Ideal) -> Result<(), RingsError> {
    ideal.generators().iter().try_for_each(require_homogeneous)
}

/// Degree-`d` monomials outside the leading-term ideal.
pub fn graded_dim(ideal: &Ideal, d: u64) -> Result<GradedReport, RingsError> {
    require_homogeneous_ideal(ideal)?;
    let leads: Vec<&Monomial> = ideal
        .groebner_basis()
        .iter()
        .map(|g| g.leading_monomial().unwrap())
        .collect();
    let standard: Vec<Monomial> = graded_piece_basis(ideal.ring(), d)
        .into_iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect();
    Ok(GradedReport {
        degree: d,
        dim_quotient: standard.len() as u64,
        standard_monomials: standard,
    })
}

/// `[dim (B/I)_0, …, dim (B/I)_up_to]`.
pub fn hilbert_function(ideal: &Ideal, up_to: u64) -> Result<Vec<u64>, RingsError> {
    (0..=up_to)
        .map(|d| graded_dim(ideal, d).map(|r| r.dim_quotient))
        .collect()
}

/// All `m·g` of degree `d` with `g` among `gens`.
fn macaulay_rows(ring: &Ring, gens: &[Polynomial], d: u64) -> Vec<Polynomial> {
    let one = ring.field().one();
    gens.iter()
        .filter_map(|g| g.total_degree().filter(|&dg| dg <= d).map(|dg| (g, dg)))
        .flat_map(|(g, dg)| {
            graded_piece_basis(ring, d - dg)
                .into_iter()
                .map(|m| g.mul_term(&m, &one))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `dim I_d` for the ideal spanned by `gens`.
fn span_dim(ring: &Ring, gens: &[Polynomial], d: u64) -> usize {
    exact_rank(ring.field(), &macaulay_rows(ring, gens, d))
}

/// `dim (B/I)_d` from the rank of the multiples of the generators in degree
/// `d`, without any Gröbner basis.
pub fn linalg_oracle(ideal: &Ideal, d: u64) -> Result<u64, RingsError> {
    require_homogeneous_ideal(ideal)?;
    let ring = ideal.ring();
    let total = graded_piece_basis(ring, d).len();
    Ok((total - span_dim(ring, ideal.generators(), d)) as u64)
}

/// `dim (B/(I ∩ J))_d` from `dim (I ∩ J)_d = dim I_d + dim J_d - dim (I + J)_d`,
/// using only the generators of `I` and `J`.
pub fn linalg_oracle_intersection(i: &Ideal, j: &Ideal, d: u64) -> Result<u64, RingsError> {
    require_homogeneous_ideal(i)?;
    require_homogeneous_ideal(j)?;
    let ring = i.ring();
    let total = graded_piece_basis(ring, d).len();
    let both: Vec<Polynomial> = i
        .generators()
        .iter()
        .chain(j.generators())
        .cloned()
        .collect();
    let meet = span_dim(ring, i.generators(), d) + span_dim(ring, j.generators(), d)
        - span_dim(ring, &both, d);
    Ok((total - meet) as u64)
}

/// Minimal generators of a homogeneous ideal in one degree.
#[derive(Debug, Clone)]
pub struct MinGens {
    pub degree: u64,
    pub count: usize,
    /// generators of this degree in a minimal generating set
    pub generators: Vec<Polynomial>,
}

/// Minimal generators in each degree `0..=up_to`, chosen among the given
/// generators by a degree-by-degree Gröbner computation.
pub fn mingens_degrees(ideal: &Ideal, up_to: u64) -> Result<Vec<MinGens>, RingsError> {
    require_homogeneous_ideal(ideal)?;
    let low: Vec<Polynomial> = ideal
        .generators()
        .iter()
        .filter(|g| g.total_degree().is_some_and(|d| d <= up_to))
        .cloned()
        .collect();
    let kept = minimal_generators(&low);
    Ok((0..=up_to)
        .map(|d| {
            let generators: Vec<Polynomial> = kept
                .iter()
                .filter(|g| g.total_degree() == Some(d))
                .cloned()
                .collect();
            MinGens {
                degree: d,
                count: generators.len(),
                generators,
            }
        })
        .collect())
}

/// Number of minimal generators in each degree `0..=up_to` by linear
/// algebra alone: `dim I_d - dim (B_1 · I_{d-1})`.
pub fn mingens_oracle(ideal: &Ideal, up_to: u64) -> Result<Vec<usize>, RingsError> {
    require_homogeneous_ideal(ideal)?;
    let ring = ideal.ring();
    let one = ring.field().one();
    let vars: Vec<Monomial> = (0..ring.nvars())
        .map(|i| Monomial::variable(ring.nvars(), i))
        .collect();
    let mut prev: Vec<Polynomial> = Vec::new();
    let mut out = Vec::new();
    for d in 0..=up_to {
        let mut e = Echelon::new(ring);
        for v in &prev {
            for x in &vars {
                e.insert(&v.mul_term(x, &one));
            }
        }
        let fresh = ideal
            .generators()
            .iter()
            .filter(|g| g.total_degree() == Some(d) && e.insert(g))
            .count();
        out.push(fresh);
        prev = e.rows().cloned().collect();
    }
    Ok(out)
}

/// True iff the residues of `candidate` form a basis of `(B/I)_d`.
pub fn quotient_basis_check(
    ideal: &Ideal,
    d: u64,
    candidate: &[Polynomial],
) -> Result<bool, RingsError> {
    for c in candidate {
        match c.is_homogeneous() {
            Some(k) if k == d as i64 => {}
            Some(-1) => {}
            Some(k) => {
                return Err(RingsError::DegreeMismatch {
                    expected: d,
                    found: k,
                })
            }
            None => return Err(RingsError::NotHomogeneous(c.render())),
        }
    }
    let report = graded_dim(ideal, d)?;
    if candidate.len() as u64 != report.dim_quotient {
        return Ok(false);
    }
    let mut e = Echelon::new(ideal.ring());
    for c in candidate {
        if !e.insert(&normal_form(c, ideal.groebner_basis())) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Dimension of `span(a) ∩ span(b)` for homogeneous families.
pub fn intersection_dim(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> usize {
    let rank = |rows: &mut dyn Iterator<Item = &Polynomial>| {
        let mut e = Echelon::new(ring);
        rows.for_each(|p| {
            e.insert(p);
        });
        e.rank()
    };
    rank(&mut a.iter()) + rank(&mut b.iter()) - rank(&mut a.iter().chain(b))
}
