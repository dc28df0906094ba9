//! Incremental span membership with combination coefficients, for depth-first
//! searches over column subsets.

use crate::code_core::gf::GfTables;

/// A stack of vectors kept in echelon form. Each stored row remembers how it
/// was formed from the pushed vectors, so membership queries can return the
/// coefficients of a combination.
#[derive(Debug, Clone)]
pub struct IncrementalSpan<'g> {
    gf: &'g GfTables,
    /// (reduced row, pivot, combination over pushed vectors)
    rows: Vec<(Vec<u8>, usize, Vec<u8>)>,
}

impl<'g> IncrementalSpan<'g> {
    pub fn new(gf: &'g GfTables) -> Self {
        IncrementalSpan { gf, rows: Vec::new() }
    }

    /// Number of (independent) vectors pushed.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduce `v` against the stored rows; returns the residual and the
    /// combination `c` with `v = residual + Σ c_i · pushed_i`.
    fn reduce(&self, v: &[u8]) -> (Vec<u8>, Vec<u8>) {
        let gf = self.gf;
        let mut r = v.to_vec();
        let mut combo = vec![0u8; self.rows.len()];
        for (row, pivot, row_combo) in &self.rows {
            let c = r[*pivot];
            if c != 0 {
                gf.axpy(&mut r, gf.neg(c), row);
                for (x, &y) in combo.iter_mut().zip(row_combo) {
                    *x = gf.add(*x, gf.mul(c, y));
                }
            }
        }
        (r, combo)
    }

    /// Push `v` if it is independent of the current span; returns whether it
    /// was added.
    pub fn push(&mut self, v: &[u8]) -> bool {
        let gf = self.gf;
        let (r, combo) = self.reduce(v);
        let Some(pivot) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        // r = v − Σ combo_i pushed_i; normalize the pivot to 1
        let inv = gf.inv(r[pivot]);
        let row = gf.scale(inv, &r);
        let mut row_combo: Vec<u8> = combo.iter().map(|&c| gf.mul(inv, gf.neg(c))).collect();
        row_combo.push(inv);
        // widen older combinations
        for (_, _, c) in self.rows.iter_mut() {
            c.resize(row_combo.len(), 0);
        }
        self.rows.push((row, pivot, row_combo));
        true
    }

    /// Remove the most recently pushed vector.
    pub fn pop(&mut self) {
        self.rows.pop();
        let len = self.rows.len();
        for (_, _, c) in self.rows.iter_mut() {
            c.truncate(len);
        }
    }

    /// Coefficients `c` with `v = Σ c_i · pushed_i`, if `v` is in the span.
    pub fn express(&self, v: &[u8]) -> Option<Vec<u8>> {
        let (r, combo) = self.reduce(v);
        r.iter().all(|&x| x == 0).then_some(combo)
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::galois::FieldSpec;

    #[test]
    fn express_returns_valid_combination() {
        let gf = GfTables::new(Arc::new(FieldSpec::new(5, 1).unwrap())).unwrap();
        let a = vec![1u8, 2, 0, 4];
        let b = vec![0u8, 3, 1, 1];
        let c = vec![2u8, 2, 2, 2];
        let mut s = IncrementalSpan::new(&gf);
        assert!(s.push(&a));
        assert!(s.push(&b));
        assert!(s.push(&c));
        // v = 3a + 4b + 1c
        let mut v = vec![0u8; 4];
        gf.axpy(&mut v, 3, &a);
        gf.axpy(&mut v, 4, &b);
        gf.axpy(&mut v, 1, &c);
        assert_eq!(s.express(&v), Some(vec![3, 4, 1]));
        assert!(!s.push(&v));
        s.pop();
        assert_eq!(s.express(&v), None);
        assert_eq!(s.len(), 2);
    }
}
