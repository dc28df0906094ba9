//! Locality: the smallest `r` such that every generator column is a linear
//! combination of at most `r` other columns.
//!
//! The exact search visits, per column, candidate repair sets by size and
//! then lexicographically, and returns the first one whose span contains the
//! column, together with the combination coefficients. The lemma path
//! computes `d⊥ − 1` when the supports of the minimum-weight dual words cover
//! every coordinate equally often (a 1-design).

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code_core::code::LinearCode;
use crate::code_core::lowweight::min_weight_dual_supports;
use crate::code_core::span::IncrementalSpan;
use crate::error::{OrthoError, Result};

/// A repair set for one coordinate: `g_column = Σ coefficients[i]·g_set[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairSet {
    pub column: usize,
    pub set: Vec<usize>,
    pub coefficients: Vec<u8>,
}

/// The locality with one minimal repair set per coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalityWitness {
    pub r: usize,
    pub repairs: Vec<RepairSet>,
}

impl LocalityWitness {
    /// Re-check every stated combination against the generator columns.
    pub fn verify(&self, code: &LinearCode) -> bool {
        let gf = code.gf();
        self.repairs.len() == code.n()
            && self.repairs.iter().all(|rs| {
                let mut acc = vec![0u8; code.k()];
                for (&j, &c) in rs.set.iter().zip(&rs.coefficients) {
                    gf.axpy(&mut acc, c, &code.column(j));
                }
                rs.set.len() <= self.r && !rs.set.contains(&rs.column) && acc == code.column(rs.column)
            })
    }
}

/// Exact locality by exhaustive repair-set search, up to `r_max`, visiting at
/// most `budget` candidate sets in total.
pub fn locality(code: &LinearCode, r_max: usize, budget: u64) -> Result<LocalityWitness> {
    let n = code.n();
    let columns: Vec<Vec<u8>> = (0..n).map(|j| code.column(j)).collect();
    if let Some(j) = columns.iter().position(|c| c.iter().all(|&x| x == 0)) {
        return Err(OrthoError::ZeroColumn(j));
    }
    let visited = AtomicU64::new(0);
    let repairs: Vec<Result<RepairSet>> = (0..n)
        .into_par_iter()
        .map(|j| {
            for size in 1..=r_max.min(n - 1) {
                let mut span = IncrementalSpan::new(code.gf());
                let mut stack = Vec::with_capacity(size);
                let mut search = Search { columns: &columns, target: j, size, visited: &visited, budget };
                if let Some(rs) = search.dfs(0, &mut span, &mut stack)? {
                    return Ok(rs);
                }
            }
            Err(OrthoError::LocalityExceeds { r_max, column: j })
        })
        .collect();
    let repairs = repairs.into_iter().collect::<Result<Vec<_>>>()?;
    let r = repairs.iter().map(|rs| rs.set.len()).max().unwrap_or(0);
    Ok(LocalityWitness { r, repairs })
}

struct Search<'a> {
    columns: &'a [Vec<u8>],
    target: usize,
    size: usize,
    visited: &'a AtomicU64,
    budget: u64,
}

impl Search<'_> {
    fn dfs(
        &mut self,
        start: usize,
        span: &mut IncrementalSpan<'_>,
        stack: &mut Vec<usize>,
    ) -> Result<Option<RepairSet>> {
        if stack.len() == self.size {
            let seen = self.visited.fetch_add(1, Ordering::Relaxed) + 1;
            if seen > self.budget {
                return Err(OrthoError::BudgetExceeded {
                    what: "locality search".into(),
                    needed: format!("more than {} repair-set candidates", self.budget),
                    budget: self.budget,
                });
            }
            // a smaller set would already have succeeded, so all
            // coefficients of a hit are nonzero
            return Ok(span.express(&self.columns[self.target]).map(|coefficients| RepairSet {
                column: self.target,
                set: stack.clone(),
                coefficients,
            }));
        }
        let remaining = self.size - stack.len();
        for j in start..self.columns.len() {
            if j == self.target {
                continue;
            }
            if self.columns.len() - j < remaining {
                break;
            }
            // dependent sets have the span of a smaller set: already tried
            if span.push(&self.columns[j]) {
                stack.push(j);
                let hit = self.dfs(j + 1, span, stack)?;
                stack.pop();
                span.pop();
                if hit.is_some() {
                    return Ok(hit);
                }
            }
        }
        Ok(None)
    }
}

/// Lemma-path locality facts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaLocality {
    pub d_perp: usize,
    /// Number of minimum-weight dual supports.
    pub supports: usize,
    /// Minimum and maximum number of supports through a coordinate.
    pub coverage: (usize, usize),
    /// The supports form a 1-design.
    pub one_design: bool,
    /// `d⊥ − 1` when the lemma applies.
    pub locality: Option<usize>,
}

/// Locality via the dual minimum-weight supports.
pub fn lemma_locality(code: &LinearCode, d_perp: usize, budget: u64) -> Result<LemmaLocality> {
    let supports = min_weight_dual_supports(code, d_perp, budget)?;
    let mut cover = vec![0usize; code.n()];
    supports.iter().flatten().for_each(|&j| cover[j] += 1);
    let (lo, hi) = (cover.iter().copied().min().unwrap_or(0), cover.iter().copied().max().unwrap_or(0));
    let one_design = lo == hi && lo > 0;
    Ok(LemmaLocality {
        d_perp,
        supports: supports.len(),
        coverage: (lo, hi),
        one_design,
        locality: one_design.then(|| d_perp - 1),
    })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::galois::FieldSpec;

    #[test]
    fn zero_column_rejected() {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let code = LinearCode::new(f, 3, vec![vec![1, 0, 1]]).unwrap();
        assert_eq!(locality(&code, 3, 1 << 20).unwrap_err(), OrthoError::ZeroColumn(1));
    }

    #[test]
    fn repetition_code_has_locality_one() {
        let f = Arc::new(FieldSpec::new(5, 1).unwrap());
        let code = LinearCode::new(f, 4, vec![vec![1, 2, 3, 4]]).unwrap();
        let w = locality(&code, 2, 1 << 20).unwrap();
        assert_eq!(w.r, 1);
        assert_eq!(w.repairs[0].set, vec![1]);
        assert!(w.verify(&code));
    }

    #[test]
    fn r_max_exhausted() {
        // the [3,2] parity code needs 2 columns per repair
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let code = LinearCode::new(f, 3, vec![vec![1, 0, 1], vec![0, 1, 1]]).unwrap();
        assert!(matches!(locality(&code, 1, 1 << 20), Err(OrthoError::LocalityExceeds { r_max: 1, .. })));
        assert_eq!(locality(&code, 2, 1 << 20).unwrap().r, 2);
    }
}
