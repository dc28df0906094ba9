//! Projectivity: no zero column and no two proportional columns.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::code_core::code::LinearCode;

/// Result of the projectivity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Projectivity {
    /// All columns nonzero and pairwise independent.
    Projective,
    /// Column `column` of the generator matrix is zero.
    ZeroColumn { column: usize },
    /// Columns `first` and `second` are proportional.
    Dependent { first: usize, second: usize },
}

impl Projectivity {
    pub fn is_projective(&self) -> bool {
        matches!(self, Projectivity::Projective)
    }
}

/// Check projectivity by scaling each column's first nonzero entry to 1 and
/// looking for duplicates.
pub fn projectivity(code: &LinearCode) -> Projectivity {
    let gf = code.gf();
    let mut seen: HashMap<Vec<u8>, usize> = HashMap::new();
    for j in 0..code.n() {
        let col = code.column(j);
        let Some(&lead) = col.iter().find(|&&x| x != 0) else {
            return Projectivity::ZeroColumn { column: j };
        };
        let normalized = gf.scale(gf.inv(lead), &col);
        if let Some(&i) = seen.get(&normalized) {
            return Projectivity::Dependent { first: i, second: j };
        }
        seen.insert(normalized, j);
    }
    Projectivity::Projective
}

/// Whether the code is projective.
pub fn is_projective(code: &LinearCode) -> bool {
    projectivity(code).is_projective()
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::galois::FieldSpec;

    #[test]
    fn detects_duplicates_and_zero_columns() {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let dup = LinearCode::new(f.clone(), 3, vec![vec![1, 2, 0], vec![0, 0, 1]]).unwrap();
        assert_eq!(projectivity(&dup), Projectivity::Dependent { first: 0, second: 1 });
        let zero = LinearCode::new(f.clone(), 3, vec![vec![1, 0, 1], vec![0, 0, 1]]).unwrap();
        assert_eq!(projectivity(&zero), Projectivity::ZeroColumn { column: 1 });
        let simplex = LinearCode::new(f, 4, vec![vec![1, 0, 1, 1], vec![0, 1, 1, 2]]).unwrap();
        assert!(is_projective(&simplex));
    }
}
