//! Exact linear algebra over the coefficient field: dense solving,
//! Bareiss rank, and an incremental sparse echelon form whose rows are
//! homogeneous polynomials (columns are monomials).

use std::collections::HashMap;

use crate::coeff::{FieldElement, Rational};
use crate::poly::{Monomial, Polynomial, Ring};

use super::RingsError;

/// Solution set of `A x = b`.
#[derive(Debug, Clone, PartialEq)]
pub enum Solution {
    Inconsistent,
    Unique(Vec<FieldElement>),
    /// `particular + span(nullspace)`
    Family {
        particular: Vec<FieldElement>,
        nullspace: Vec<Vec<FieldElement>>,
    },
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<FieldElement>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].inv().expect("nonzero pivot");
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..m[r].len() {
                    let v = &m[row][c] * &f;
                    m[r][c] = &m[r][c] - &v;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Exact Gauss–Jordan solution of `A x = b`.
pub fn solve_linear(a: &[Vec<FieldElement>], b: &[FieldElement]) -> Result<Solution, RingsError> {
    if a.len() != b.len() {
        return Err(RingsError::ShapeMismatch(format!(
            "{} rows but {} right-hand sides",
            a.len(),
            b.len()
        )));
    }
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|r| r.len() != cols) {
        return Err(RingsError::ShapeMismatch("ragged matrix".into()));
    }
    let mut m: Vec<Vec<FieldElement>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut row = r.clone();
            row.push(x.clone());
            row
        })
        .collect();
    let pivots = rref(&mut m, cols);
    let zero = a
        .iter()
        .flatten()
        .chain(b)
        .next()
        .map_or_else(FieldElement::zero, |x| x.field().zero());
    // a pivot in the augmented column means 0 = nonzero
    for row in &m[pivots.len()..] {
        if !row[cols].is_zero() {
            return Ok(Solution::Inconsistent);
        }
    }
    let mut particular = vec![zero.clone(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = m[r][cols].clone();
    }
    if pivots.len() == cols {
        return Ok(Solution::Unique(particular));
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let nullspace = free
        .iter()
        .map(|&f| {
            let mut v = vec![zero.clone(); cols];
            v[f] = zero.field().one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&m[r][f];
            }
            v
        })
        .collect();
    Ok(Solution::Family {
        particular,
        nullspace,
    })
}

/// Rank by fraction-free (Bareiss) elimination. Rational rows are first
/// scaled to integer rows so every intermediate entry stays integral.
pub fn bareiss_rank(rows: &[Vec<FieldElement>]) -> usize {
    let mut m: Vec<Vec<FieldElement>> = rows
        .iter()
        .map(|r| {
            let rats: Option<Vec<&Rational>> = r
                .iter()
                .map(|x| match x {
                    FieldElement::Rational(q) => Some(q),
                    FieldElement::Ext(_) => None,
                })
                .collect();
            match rats {
                Some(rats) => {
                    let l = FieldElement::from(Rational::from(Rational::denom_lcm(rats)));
                    r.iter().map(|x| x * &l).collect()
                }
                None => r.clone(),
            }
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = FieldElement::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            for c in col + 1..cols {
                let v = &(&m[rank][col] * &m[r][c]) - &(&m[r][col] * &m[rank][c]);
                m[r][c] = v.checked_div(&prev).expect("nonzero pivot");
            }
            m[r][col] = prev.field().zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Row space of homogeneous polynomials, kept with distinct monic leading
/// monomials (pivots).
#[derive(Clone)]
pub struct Echelon {
    ring: Ring,
    pivots: HashMap<Monomial, Polynomial>,
    rows: Vec<Monomial>,
}

impl Echelon {
    pub fn new(ring: &Ring) -> Self {
        Echelon {
            ring: ring.clone(),
            pivots: HashMap::new(),
            rows: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in insertion order.
    pub fn rows(&self) -> impl Iterator<Item = &Polynomial> {
        self.rows.iter().map(|m| &self.pivots[m])
    }

    pub fn is_pivot(&self, m: &Monomial) -> bool {
        self.pivots.contains_key(m)
    }

    /// Subtracts pivot rows from every term that hits a pivot.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let mut p = p.clone();
        let mut skip = 0;
        loop {
            let hit = p.terms()[skip.min(p.len())..]
                .iter()
                .position(|(m, _)| self.pivots.contains_key(m));
            let Some(off) = hit else { return p };
            let idx = skip + off;
            let (m, c) = p.terms()[idx].clone();
            let row = &self.pivots[&m];
            p = &p - &row.scalar_mul(&c);
            skip = idx;
        }
    }

    /// Adds `p` to the span; true when the rank grew.
    pub fn insert(&mut self, p: &Polynomial) -> bool {
        let r = self.reduce(p);
        if r.is_zero() {
            return false;
        }
        let r = r.make_monic();
        let lead = r.leading_monomial().unwrap().clone();
        self.rows.push(lead.clone());
        self.pivots.insert(lead, r);
        true
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{ExtField, Field};
    use crate::poly::{MonomialOrder, RingContext};

    fn q(n: i64) -> FieldElement {
        FieldElement::from_int(n)
    }

    #[test]
    fn identity_system() {
        let a = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        let b = vec![q(3), q(-2)];
        assert_eq!(solve_linear(&a, &b).unwrap(), Solution::Unique(b));
    }

    #[test]
    fn inconsistent_and_family() {
        let a = vec![vec![q(0), q(0)]];
        assert_eq!(solve_linear(&a, &[q(1)]).unwrap(), Solution::Inconsistent);
        let a = vec![vec![q(1), q(1)]];
        match solve_linear(&a, &[q(2)]).unwrap() {
            Solution::Family {
                particular,
                nullspace,
            } => {
                assert_eq!(particular, vec![q(2), q(0)]);
                assert_eq!(nullspace, vec![vec![q(-1), q(1)]]);
            }
            other => panic!("{other:?}"),
        }
        assert!(solve_linear(&a, &[q(1), q(2)]).is_err());
    }

    #[test]
    fn solves_over_extension() {
        let k =
            Field::Ext(ExtField::new(crate::coeff::ratpoly::from_ints(&[1, -1, 1]), "a").unwrap());
        let a_ = k.generator().unwrap();
        // a*x = 1  →  x = 1/a = 1 - a
        let s = solve_linear(&[vec![a_.clone()]], &[k.one()]).unwrap();
        assert_eq!(s, Solution::Unique(vec![&k.one() - &a_]));
    }

    #[test]
    fn bareiss_matches_gauss() {
        let m = vec![
            vec![q(2), q(4), q(6)],
            vec![q(1), q(2), q(3)],
            vec![q(0), q(1), q(5)],
        ];
        assert_eq!(bareiss_rank(&m), 2);
        let half = FieldElement::from(Rational::new(1, 2));
        assert_eq!(
            bareiss_rank(&[vec![half.clone(), q(1)], vec![q(1), q(2)]]),
            1
        );
        assert_eq!(bareiss_rank(&[vec![half, q(1)], vec![q(1), q(3)]]), 2);
    }

    #[test]
    fn echelon_tracks_span() {
        let r = RingContext::new(["x", "y"], MonomialOrder::Grevlex, Field::Rational).unwrap();
        let p = |s: &str| Polynomial::parse(&r, s).unwrap();
        let mut e = Echelon::new(&r);
        assert!(e.insert(&p("x^2+y^2")));
        assert!(e.insert(&p("x*y")));
        assert!(!e.insert(&p("2*x^2+2*y^2-x*y")));
        assert!(e.insert(&p("y^2")));
        assert_eq!(e.rank(), 3);
        assert!(e.contains(&p("x^2")));
    }
}
