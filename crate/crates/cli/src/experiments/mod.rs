//! The reproducible computations, one report each.

mod bielliptic;
mod ideals;
mod residues;
mod symbols;

use std::time::Instant;

use chowlab_core::coeff::CoeffError;
use chowlab_core::curves::CurvesError;
use chowlab_core::groebner::{intersect, GroebnerError, Ideal};
use chowlab_core::poly::PolyError;
use chowlab_core::rings::{
    graded_dim, jacob, linalg_oracle, linalg_oracle_intersection, JacobianKind, RingsError,
};
use thiserror::Error;

use crate::report::Report;

pub const IDS: [&str; 8] = [
    "s5-symbols",
    "s5-family-symbols",
    "s5-residue-system",
    "s5-ideal",
    "s5-hilbert",
    "s6-residue",
    "s6-ideal",
    "s7-dims",
];

#[derive(Debug, Error)]
pub enum ExpError {
    #[error("unknown experiment `{0}`")]
    UnknownId(String),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Rings(#[from] RingsError),
    #[error(transparent)]
    Curves(#[from] CurvesError),
}

/// Runs one experiment and stamps its wall time.
pub fn run(id: &str) -> Result<Report, ExpError> {
    let start = Instant::now();
    let mut report = match id {
        "s5-symbols" => symbols::fermat_pair()?,
        "s5-family-symbols" => symbols::family()?,
        "s5-residue-system" => residues::family_system()?,
        "s5-ideal" => ideals::kernel_intersection()?,
        "s5-hilbert" => ideals::hilbert_comparison()?,
        "s6-residue" => residues::torsion_pair()?,
        "s6-ideal" => ideals::torsion_intersection()?,
        "s7-dims" => bielliptic::dims()?,
        other => return Err(ExpError::UnknownId(other.to_string())),
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Degrees `d <= up_to` where the Gröbner count of `dim (B/I)_d` disagrees
/// with plain linear algebra; empty when they agree.
pub fn oracle_disagreements(ideal: &Ideal, up_to: u64) -> Result<Vec<u64>, RingsError> {
    let mut bad = Vec::new();
    for d in 0..=up_to {
        if graded_dim(ideal, d)?.dim_quotient != linalg_oracle(ideal, d)? {
            bad.push(d);
        }
    }
    Ok(bad)
}

/// Degrees `d <= up_to` where the Gröbner count for `I ∩ J` disagrees with
/// the rank count `dim I_d + dim J_d - dim (I + J)_d`.
pub fn intersection_disagreements(
    meet: &Ideal,
    i: &Ideal,
    j: &Ideal,
    up_to: u64,
) -> Result<Vec<u64>, RingsError> {
    let mut bad = Vec::new();
    for d in 0..=up_to {
        if graded_dim(meet, d)?.dim_quotient != linalg_oracle_intersection(i, j, d)? {
            bad.push(d);
        }
    }
    Ok(bad)
}

/// An ideal an experiment measures; intersections keep their two factors.
pub struct ExperimentIdeal {
    pub name: String,
    pub ideal: Ideal,
    pub factors: Option<(Ideal, Ideal)>,
}

impl ExperimentIdeal {
    fn plain(name: &str, ideal: Ideal) -> Self {
        ExperimentIdeal {
            name: name.to_string(),
            ideal,
            factors: None,
        }
    }

    fn meet(name: &str, i: &Ideal, j: &Ideal) -> Result<Self, ExpError> {
        Ok(ExperimentIdeal {
            name: name.to_string(),
            ideal: intersect(i, j)?,
            factors: Some((i.clone(), j.clone())),
        })
    }

    /// Degrees where the Gröbner and linear-algebra counts disagree.
    pub fn disagreements(&self, up_to: u64) -> Result<Vec<u64>, RingsError> {
        match &self.factors {
            None => oracle_disagreements(&self.ideal, up_to),
            Some((i, j)) => intersection_disagreements(&self.ideal, i, j, up_to),
        }
    }
}

/// Every ideal whose graded pieces an experiment reports.
pub fn experiment_ideals() -> Result<Vec<ExperimentIdeal>, ExpError> {
    let mut out = Vec::new();
    let (r, i, j) = ideals::kernel_generators()?;
    let (i, j) = (Ideal::new(&r, i)?, Ideal::new(&r, j)?);
    out.push(ExperimentIdeal::meet("s5-ideal I ∩ J", &i, &j)?);
    out.push(ExperimentIdeal::plain("s5-ideal I", i));
    out.push(ExperimentIdeal::plain("s5-ideal J", j));

    let (jac, extended, _) = ideals::hilbert_ideals(&ideals::hilbert_setup()?)?;
    out.push(ExperimentIdeal::plain("s5-hilbert jacobian", jac));
    out.push(ExperimentIdeal::plain(
        "s5-hilbert jacobian + NPK",
        extended,
    ));

    let (r, i, j) = ideals::torsion_generators()?;
    let (i, j) = (Ideal::new(&r, i)?, Ideal::new(&r, j)?);
    out.push(ExperimentIdeal::meet("s6-ideal I ∩ J", &i, &j)?);
    out.push(ExperimentIdeal::plain("s6-ideal I", i));
    out.push(ExperimentIdeal::plain("s6-ideal J", j));

    let (_, f) = bielliptic::quartic()?;
    out.push(ExperimentIdeal::plain(
        "s7-dims jacobian",
        jacob(&f, JacobianKind::Full)?,
    ));
    Ok(out)
}
