//! Linear codes over GF(q): generator rows, reduced basis, duality helpers and
//! the plain-text code file format.
//!
//! Code file format:
//!
//! ```text
//! q n k_declared
//! p d c_0 … c_d          (field descriptor of the alphabet GF(q))
//! r_1 r_2 … r_n          (one generator row per line, symbols as element codes)
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::code_core::gf::GfTables;
use crate::error::{OrthoError, Result};
use crate::galois::FieldSpec;

/// Reduced row echelon form of a list of vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    /// Nonzero rows of the RREF, pivot entries equal to 1.
    pub rows: Vec<Vec<u8>>,
    /// Pivot column of each row, increasing.
    pub pivots: Vec<usize>,
}

/// Gauss–Jordan elimination over the given tables.
pub fn rref(gf: &GfTables, rows: &[Vec<u8>], n: usize) -> Echelon {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(pr) = (r..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = gf.inv(m[r][col]);
        m[r] = gf.scale(inv, &m[r]);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[col] != 0 {
                let c = gf.neg(row[col]);
                gf.axpy(row, c, &pivot_row);
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Echelon { rows: m, pivots }
}

/// Basis of `{x : G x^T = 0}` for an echelon form `G` of length-`n` vectors.
pub fn null_space(gf: &GfTables, ech: &Echelon, n: usize) -> Vec<Vec<u8>> {
    let mut is_pivot = vec![false; n];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&j| !is_pivot[j])
        .map(|free| {
            let mut v = vec![0u8; n];
            v[free] = 1;
            for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
                v[p] = gf.neg(row[free]);
            }
            v
        })
        .collect()
}

/// A linear code given by generator rows over a small field.
#[derive(Debug, Clone)]
pub struct LinearCode {
    gf: Arc<GfTables>,
    n: usize,
    rows: Vec<Vec<u8>>,
    echelon: Echelon,
}

impl LinearCode {
    /// Code spanned by `rows` over `field`; every row must have length `n`
    /// and symbols below `q`.
    pub fn new(field: Arc<FieldSpec>, n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        Self::with_tables(Arc::new(GfTables::new(field)?), n, rows)
    }

    /// As [`LinearCode::new`] but reusing prebuilt tables.
    pub fn with_tables(gf: Arc<GfTables>, n: usize, rows: Vec<Vec<u8>>) -> Result<Self> {
        if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(OrthoError::MalformedCode(format!("row {i} has length {}, expected {n}", r.len())));
        }
        if rows.iter().flatten().any(|&s| s as usize >= gf.q()) {
            return Err(OrthoError::MalformedCode(format!("symbol outside GF({})", gf.q())));
        }
        let echelon = rref(&gf, &rows, n);
        Ok(LinearCode { gf, n, rows, echelon })
    }

    /// The whole space GF(q)^n.
    pub fn full_space(field: Arc<FieldSpec>, n: usize) -> Result<Self> {
        let rows = (0..n)
            .map(|i| {
                let mut r = vec![0u8; n];
                r[i] = 1;
                r
            })
            .collect();
        Self::new(field, n, rows)
    }

    /// Alphabet tables.
    pub fn gf(&self) -> &Arc<GfTables> {
        &self.gf
    }
    /// Alphabet field.
    pub fn field(&self) -> &Arc<FieldSpec> {
        self.gf.field()
    }
    /// Alphabet size `q`.
    pub fn q(&self) -> usize {
        self.gf.q()
    }
    /// Length.
    pub fn n(&self) -> usize {
        self.n
    }
    /// Dimension (rank of the generator rows).
    pub fn k(&self) -> usize {
        self.echelon.rows.len()
    }
    /// Generator rows as supplied.
    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }
    /// Reduced basis (RREF rows).
    pub fn basis(&self) -> &[Vec<u8>] {
        &self.echelon.rows
    }
    /// Pivot columns of the reduced basis.
    pub fn pivots(&self) -> &[usize] {
        &self.echelon.pivots
    }

    /// Column `j` of the reduced generator matrix.
    pub fn column(&self, j: usize) -> Vec<u8> {
        self.basis().iter().map(|r| r[j]).collect()
    }

    /// Encode a message of length `k` against the reduced basis.
    pub fn encode(&self, msg: &[u8]) -> Vec<u8> {
        let mut c = vec![0u8; self.n];
        for (&m, row) in msg.iter().zip(self.basis()) {
            self.gf.axpy(&mut c, m, row);
        }
        c
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &[u8]) -> bool {
        if v.len() != self.n {
            return false;
        }
        let mut r = v.to_vec();
        for (row, &p) in self.basis().iter().zip(self.pivots()) {
            if r[p] != 0 {
                let c = self.gf.neg(r[p]);
                self.gf.axpy(&mut r, c, row);
            }
        }
        r.iter().all(|&x| x == 0)
    }

    /// Whether the all-one vector is a codeword.
    pub fn contains_all_ones(&self) -> bool {
        self.contains(&vec![1u8; self.n])
    }

    /// Extended code: append to each basis row minus its coordinate sum.
    pub fn extend(&self) -> LinearCode {
        let rows = self
            .basis()
            .iter()
            .map(|r| {
                let s = r.iter().fold(0u8, |acc, &x| self.gf.add(acc, x));
                let mut e = r.clone();
                e.push(self.gf.neg(s));
                e
            })
            .collect();
        LinearCode::with_tables(self.gf.clone(), self.n + 1, rows).expect("rows are well formed")
    }

    /// Augmented code: the span of the code and the all-one vector.
    pub fn augment(&self) -> Result<LinearCode> {
        if self.contains_all_ones() {
            return Err(OrthoError::AllOnesInSpan);
        }
        let mut rows = self.basis().to_vec();
        rows.push(vec![1u8; self.n]);
        LinearCode::with_tables(self.gf.clone(), self.n, rows)
    }

    /// Basis of the dual code `C⊥`.
    pub fn dual_basis(&self) -> Vec<Vec<u8>> {
        null_space(&self.gf, &self.echelon, self.n)
    }

    /// The dual code `C⊥` as a [`LinearCode`].
    pub fn dual(&self) -> LinearCode {
        LinearCode::with_tables(self.gf.clone(), self.n, self.dual_basis()).expect("rows are well formed")
    }

    /// `C ⊆ C⊥`, checked as `G·Gᵀ = 0` on the reduced basis.
    pub fn is_self_orthogonal(&self) -> bool {
        let b = self.basis();
        (0..b.len()).all(|i| (i..b.len()).all(|j| self.gf.dot(&b[i], &b[j]) == 0))
    }

    /// Serialize in the code file format.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {}\n{}\n", self.q(), self.n, self.k(), self.field().descriptor());
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Parse the code file format. The declared dimension must match the rank.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| OrthoError::Parse("empty code file".into()))?;
        let h: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse().map_err(|e| OrthoError::Parse(format!("header: {e}"))))
            .collect::<Result<_>>()?;
        let [q, n, k] = h[..] else {
            return Err(OrthoError::Parse("header must be `q n k`".into()));
        };
        let field = Arc::new(FieldSpec::from_descriptor(
            lines.next().ok_or_else(|| OrthoError::Parse("missing field descriptor".into()))?,
        )?);
        if field.order() as usize != q {
            return Err(OrthoError::Parse(format!("descriptor describes GF({}), header says {q}", field.order())));
        }
        let rows = lines
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<u8>().map_err(|e| OrthoError::Parse(format!("row: {e}"))))
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let code = LinearCode::new(field, n, rows)?;
        if code.k() != k {
            return Err(OrthoError::MalformedCode(format!("declared dimension {k}, rank is {}", code.k())));
        }
        Ok(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf3() -> Arc<FieldSpec> {
        Arc::new(FieldSpec::new(3, 1).unwrap())
    }

    #[test]
    fn rank_and_containment() {
        let c = LinearCode::new(gf3(), 4, vec![vec![1, 1, 0, 0], vec![2, 2, 0, 0], vec![0, 1, 1, 1]]).unwrap();
        assert_eq!(c.k(), 2);
        assert!(c.contains(&[1, 2, 1, 1]));
        assert!(!c.contains(&[1, 0, 0, 0]));
    }

    #[test]
    fn extend_single_row() {
        let c = LinearCode::new(gf3(), 2, vec![vec![1, 1]]).unwrap();
        let e = c.extend();
        assert_eq!(e.basis(), &[vec![1, 1, 1]]);
        assert_eq!(e.k(), 1);
    }

    #[test]
    fn augment_rejects_all_ones() {
        let c = LinearCode::new(gf3(), 3, vec![vec![1, 1, 1]]).unwrap();
        assert_eq!(c.augment().unwrap_err(), OrthoError::AllOnesInSpan);
        let d = LinearCode::new(gf3(), 3, vec![vec![1, 2, 0]]).unwrap();
        assert_eq!(d.augment().unwrap().k(), 2);
    }

    #[test]
    fn dual_is_orthogonal_with_complementary_dimension() {
        let c = LinearCode::new(gf3(), 5, vec![vec![1, 0, 2, 1, 1], vec![0, 1, 1, 2, 0]]).unwrap();
        let d = c.dual();
        assert_eq!(c.k() + d.k(), 5);
        for a in c.basis() {
            for b in d.basis() {
                assert_eq!(c.gf().dot(a, b), 0);
            }
        }
    }

    #[test]
    fn full_space_not_self_orthogonal() {
        assert!(!LinearCode::full_space(gf3(), 3).unwrap().is_self_orthogonal());
    }

    #[test]
    fn text_roundtrip() {
        let f = Arc::new(FieldSpec::new(3, 2).unwrap());
        let c = LinearCode::new(f, 3, vec![vec![1, 5, 7], vec![0, 1, 8]]).unwrap();
        let back = LinearCode::from_text(&c.to_text()).unwrap();
        assert_eq!(back.rows(), c.rows());
        assert_eq!(back.field(), c.field());
        assert!(LinearCode::from_text("3 3 2\n3 1 1 1\n1 0 0\n").is_err());
    }

    #[test]
    fn malformed_rows() {
        assert!(matches!(LinearCode::new(gf3(), 3, vec![vec![1, 0]]), Err(OrthoError::MalformedCode(_))));
        assert!(matches!(LinearCode::new(gf3(), 2, vec![vec![1, 3]]), Err(OrthoError::MalformedCode(_))));
    }
}
