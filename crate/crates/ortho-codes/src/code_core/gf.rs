//! Byte-sized arithmetic tables for a code alphabet GF(q), `q ≤ 256`.

use std::sync::Arc;

use crate::error::{OrthoError, Result};
use crate::galois::FieldSpec;

/// Full addition/multiplication tables of a small field, with symbols as
/// `u8` element codes of the underlying [`FieldSpec`].
#[derive(Debug, Clone)]
pub struct GfTables {
    field: Arc<FieldSpec>,
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

impl GfTables {
    /// Tabulate `field`; fails when the field has more than 256 elements.
    pub fn new(field: Arc<FieldSpec>) -> Result<Self> {
        let q = field.order() as usize;
        if q > 256 {
            return Err(OrthoError::AlphabetTooLarge(q as u64));
        }
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add[a * q + b] = field.add(a as u32, b as u32) as u8;
                mul[a * q + b] = field.mul(a as u32, b as u32) as u8;
            }
        }
        let neg = (0..q).map(|a| field.neg(a as u32) as u8).collect();
        let inv = (0..q).map(|a| field.inv(a as u32).unwrap_or(0) as u8).collect();
        Ok(GfTables { field, q, add, mul, neg, inv })
    }

    /// The field these tables describe.
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }
    /// Alphabet size.
    pub fn q(&self) -> usize {
        self.q
    }
    /// Whether `q` is prime (addition is then plain modular addition).
    pub fn is_prime_field(&self) -> bool {
        self.field.degree() == 1
    }
    /// Characteristic.
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }
    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }
    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }
    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        self.neg[a as usize]
    }
    /// Inverse of a nonzero symbol.
    #[inline]
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0, "inverse of zero");
        self.inv[a as usize]
    }

    /// Row of the addition table for a fixed left operand.
    pub fn add_row(&self, a: u8) -> &[u8] {
        &self.add[a as usize * self.q..(a as usize + 1) * self.q]
    }

    /// `dst += c · src`, coordinate-wise.
    pub fn axpy(&self, dst: &mut [u8], c: u8, src: &[u8]) {
        if c == 0 {
            return;
        }
        for (d, &s) in dst.iter_mut().zip(src) {
            *d = self.add(*d, self.mul(c, s));
        }
    }

    /// `c · v`.
    pub fn scale(&self, c: u8, v: &[u8]) -> Vec<u8> {
        v.iter().map(|&x| self.mul(c, x)).collect()
    }

    /// Standard inner product `Σ a_i b_i`.
    pub fn dot(&self, a: &[u8], b: &[u8]) -> u8 {
        a.iter().zip(b).fold(0, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> u8 {
        self.field.from_int(n) as u8
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf9_tables_agree_with_field() {
        let f = Arc::new(FieldSpec::new(3, 2).unwrap());
        let t = GfTables::new(f.clone()).unwrap();
        for a in 0..9u8 {
            assert_eq!(t.add(a, t.neg(a)), 0);
            if a != 0 {
                assert_eq!(t.mul(a, t.inv(a)), 1);
            }
            for b in 0..9u8 {
                assert_eq!(t.mul(a, b) as u32, f.mul(a as u32, b as u32));
            }
        }
    }

    #[test]
    fn large_alphabet_rejected() {
        let f = Arc::new(FieldSpec::new(257, 1).unwrap());
        assert_eq!(GfTables::new(f).unwrap_err(), OrthoError::AlphabetTooLarge(257));
    }
}
