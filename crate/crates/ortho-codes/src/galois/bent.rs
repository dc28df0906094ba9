//! Functions `GF(p^m) → GF(p)`: Walsh transforms and screening for the
//! weakly regular bent class used by the defining-set codes.
//!
//! A function passes [`rf_membership`] when `f(0) = 0`, it is homogeneous of
//! some even degree `h` with `gcd(h − 1, p − 1) = 1` under prime-field
//! scalings, and every Walsh coefficient is `ε · g^m · ζ^{f*(β)}` for one global
//! sign `ε`, where `g` is the exact prime-field Gauss sum. Flatness of the
//! spectrum (bentness) is screened right after `f(0) = 0`, so a non-bent
//! function is always reported as such.

use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{OrthoError, Result};
use crate::galois::cycint::CycInt;
use crate::galois::field::FieldSpec;
use crate::galois::gauss::prime_gauss_sum;

/// Values of a function `GF(p^m) → GF(p)`, indexed by element code.
#[derive(Debug, Clone)]
pub struct FunctionTable {
    field: Arc<FieldSpec>,
    values: Vec<u32>,
}

impl FunctionTable {
    /// Wrap an explicit value table; its length must equal the field order
    /// and every entry must lie in `[0, p)`.
    pub fn new(field: Arc<FieldSpec>, values: Vec<u32>) -> Result<Self> {
        if values.len() != field.order() as usize {
            return Err(OrthoError::Parse(format!(
                "function table has {} entries, field has {} elements",
                values.len(),
                field.order()
            )));
        }
        if let Some(v) = values.iter().find(|&&v| v >= field.p()) {
            return Err(OrthoError::Parse(format!("function value {v} not in GF({})", field.p())));
        }
        Ok(FunctionTable { field, values })
    }

    /// Tabulate `f` over all field elements.
    pub fn from_fn(field: Arc<FieldSpec>, f: impl Fn(&FieldSpec, u32) -> u32) -> Self {
        let values = field.elements().map(|x| f(&field, x)).collect();
        FunctionTable { field, values }
    }

    /// The nondegenerate quadratic form `tr(x²)`.
    pub fn trace_square(field: Arc<FieldSpec>) -> Self {
        Self::from_fn(field, |f, x| f.abs_trace(f.mul(x, x)))
    }

    /// Read a function table file: one integer in `[0, p)` per line, in
    /// element-code order. Blank lines and `#` comments are ignored.
    pub fn from_file(field: Arc<FieldSpec>, path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let values = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .map(|l| l.parse::<u32>().map_err(|e| OrthoError::Parse(format!("function table: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field, values)
    }

    /// Underlying field.
    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    /// `f(x)`.
    pub fn value(&self, x: u32) -> u32 {
        self.values[x as usize]
    }

    /// All values, in element-code order.
    pub fn values(&self) -> &[u32] {
        &self.values
    }
}

/// `W_f(β) = Σ_x ζ_p^{f(x) − tr(βx)}`, exactly.
pub fn walsh_transform(f: &FunctionTable, beta: u32) -> CycInt {
    let field = &f.field;
    let p = field.p();
    let mut counts = vec![0i64; p as usize];
    for x in field.elements() {
        let t = field.abs_trace(field.mul(beta, x));
        counts[((f.value(x) + p - t) % p) as usize] += 1;
    }
    CycInt::from_zeta_counts(p, &counts)
}

/// Data certifying membership of the weakly regular bent class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BentProfile {
    /// Global sign `ε ∈ {±1}`.
    pub epsilon: i8,
    /// Least even homogeneity degree `h` with `gcd(h − 1, p − 1) = 1`.
    pub h: u32,
    /// The dual function `f*`, in element-code order.
    pub dual: Vec<u32>,
}

/// The first violated clause of the membership test.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BentRejection {
    /// Screening is defined for odd characteristic only.
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    /// Clause (i): `f(0) ≠ 0`.
    #[error("clause (i): f(0) = {0} is nonzero")]
    NonzeroAtOrigin(u32),
    /// Clause (ii): no admissible even homogeneity degree.
    #[error("clause (ii): no even h with gcd(h-1, p-1) = 1 satisfies f(ax) = a^h f(x)")]
    NotHomogeneous,
    /// Clause (iii), magnitude: `|W_f(β)|² ≠ p^m`, so `f` is not bent.
    #[error("clause (iii): not bent, |W_f(beta)|^2 != p^m at beta = {0}")]
    NotBent(u32),
    /// Clause (iii), shape: `W_f(β)` is not `±g^m ζ^k`, or the sign varies.
    #[error("clause (iii): not weakly regular at beta = {0}")]
    NotWeaklyRegular(u32),
}

/// Screen `f` for membership of the weakly regular bent class.
pub fn rf_membership(f: &FunctionTable) -> std::result::Result<BentProfile, BentRejection> {
    let field = &f.field;
    let p = field.p();
    if !field.is_odd() {
        return Err(BentRejection::EvenCharacteristic);
    }
    if f.value(0) != 0 {
        return Err(BentRejection::NonzeroAtOrigin(f.value(0)));
    }
    // Bentness (flat spectrum) is screened before homogeneity so that a
    // function failing both is reported by its spectral defect.
    let p_m = BigInt::from(field.order());
    let spectrum: Vec<CycInt> = field.elements().map(|beta| walsh_transform(f, beta)).collect();
    if let Some(beta) = spectrum.iter().position(|w| w.abs_sq().as_integer() != Some(p_m.clone())) {
        return Err(BentRejection::NotBent(beta as u32));
    }
    let h = homogeneity_degree(f).ok_or(BentRejection::NotHomogeneous)?;

    let g_m = prime_gauss_sum(p).pow(field.degree());
    let rotations: Vec<CycInt> = (0..p as i64).map(|k| g_m.shift(k)).collect();
    let mut epsilon = None;
    let mut dual = Vec::with_capacity(field.order() as usize);
    for (beta, w) in spectrum.iter().enumerate() {
        let hit = rotations.iter().enumerate().find_map(|(k, r)| {
            if w == r {
                Some((1i8, k as u32))
            } else if *w == -r {
                Some((-1i8, k as u32))
            } else {
                None
            }
        });
        let Some((sign, k)) = hit else {
            return Err(BentRejection::NotWeaklyRegular(beta as u32));
        };
        if *epsilon.get_or_insert(sign) != sign {
            return Err(BentRejection::NotWeaklyRegular(beta as u32));
        }
        dual.push(k);
    }
    Ok(BentProfile { epsilon: epsilon.unwrap_or(1), h, dual })
}

/// Least even `h ∈ [2, p−1]` with `gcd(h−1, p−1) = 1` and `f(ax) = a^h f(x)`
/// for all `a ∈ GF(p)*`.
fn homogeneity_degree(f: &FunctionTable) -> Option<u32> {
    let field = &f.field;
    let p = field.p();
    (2..p).step_by(2).find(|&h| {
        (h - 1).gcd(&(p - 1)) == 1
            && (1..p).all(|a| {
                let ah = pow_mod(a, h, p);
                field.elements().all(|x| f.value(field.mul(a, x)) == ah * f.value(x) % p)
            })
    })
}

fn pow_mod(a: u32, e: u32, p: u32) -> u32 {
    (0..e).fold(1u64, |acc, _| acc * a as u64 % p as u64) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64, m: u32) -> Arc<FieldSpec> {
        Arc::new(FieldSpec::new(p, m).unwrap())
    }

    #[test]
    fn zero_function_spectrum() {
        let f = FunctionTable::from_fn(gf(3, 2), |_, _| 0);
        assert_eq!(walsh_transform(&f, 0).as_integer(), Some(BigInt::from(9)));
        for b in 1..9 {
            assert_eq!(walsh_transform(&f, b).as_integer(), Some(BigInt::from(0)));
        }
    }

    #[test]
    fn trace_square_flat_spectrum_gf9() {
        let f = FunctionTable::trace_square(gf(3, 2));
        for b in 0..9 {
            assert_eq!(walsh_transform(&f, b).abs_sq().as_integer(), Some(BigInt::from(9)));
        }
    }

    #[test]
    fn trace_square_is_weakly_regular_gf81() {
        let f = FunctionTable::trace_square(gf(3, 4));
        let prof = rf_membership(&f).unwrap();
        assert_eq!(prof.h, 2);
        assert_eq!(prof.dual[0], 0);
        // dual of tr(x²) is −tr(x²/4)
        let field = f.field().clone();
        let inv4 = field.inv(field.from_int(4)).unwrap();
        for b in field.elements() {
            let t = field.abs_trace(field.mul(inv4, field.mul(b, b)));
            assert_eq!(prof.dual[b as usize], (3 - t) % 3);
        }
    }

    #[test]
    fn rejections() {
        let linear = FunctionTable::from_fn(gf(3, 2), |f, x| f.abs_trace(x));
        assert!(matches!(rf_membership(&linear), Err(BentRejection::NotBent(_))));
        let shifted = FunctionTable::from_fn(gf(3, 2), |f, x| (f.abs_trace(f.mul(x, x)) + 1) % 3);
        assert_eq!(rf_membership(&shifted), Err(BentRejection::NonzeroAtOrigin(1)));
    }
}
