//! Griesmer and sphere-packing (Hamming) bound audits.

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

/// Optimality class derived from the sphere-packing bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpherePackingClass {
    /// No `[n, k, d+1]` code exists (it would violate the bound).
    Optimal,
    /// `[n, k, d+1]` is not excluded but `[n, k, d+2]` is.
    AlmostOptimal,
    /// The bound excludes neither: the bound alone is inconclusive.
    Neither,
}

impl SpherePackingClass {
    /// Lower-case label as used in reports.
    pub fn label(&self) -> &'static str {
        match self {
            SpherePackingClass::Optimal => "optimal",
            SpherePackingClass::AlmostOptimal => "almost-optimal",
            SpherePackingClass::Neither => "neither",
        }
    }
}

/// Bound facts about an `[n, k, d]_q` parameter set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub q: u64,
    /// `Σ_{i<k} ⌈d / q^i⌉`.
    pub griesmer_sum: u64,
    /// `n` equals the Griesmer sum.
    pub griesmer_met: bool,
    /// The Griesmer bound alone rules out an `[n, k, d+1]` code.
    pub griesmer_excludes_d_plus_1: bool,
    /// The sphere-packing bound rules out `[n, k, d+1]`.
    pub hamming_excludes_d_plus_1: bool,
    /// The sphere-packing bound rules out `[n, k, d+2]`.
    pub hamming_excludes_d_plus_2: bool,
    /// Classification by the sphere-packing rule.
    pub sphere_packing_class: SpherePackingClass,
    /// Divisor Δ of the code, when a distribution was available.
    pub divisor: Option<u64>,
}

/// `Σ_{i<k} ⌈d / q^i⌉`.
pub fn griesmer_sum(k: usize, d: usize, q: u64) -> u64 {
    let mut qi = 1u128;
    let mut s = 0u64;
    for _ in 0..k {
        s += (d as u128).div_ceil(qi) as u64;
        qi = qi.saturating_mul(q as u128);
    }
    s
}

/// Whether an `[n, k, d]_q` code would violate the sphere-packing bound
/// `q^{n−k} ≥ Σ_{i ≤ ⌊(d−1)/2⌋} C(n, i)(q − 1)^i`.
pub fn violates_hamming(n: usize, k: usize, d: usize, q: u64) -> bool {
    if k > n {
        return true;
    }
    let t = d.saturating_sub(1) / 2;
    let mut volume = BigUint::one();
    let mut binom = BigUint::one();
    let mut qpow = BigUint::one();
    for i in 1..=t.min(n) {
        binom = binom * BigUint::from(n - i + 1) / BigUint::from(i);
        qpow *= BigUint::from(q - 1);
        volume += &binom * &qpow;
    }
    BigUint::from(q).pow((n - k) as u32) < volume
}

/// Audit `[n, k, d]_q` against the Griesmer and sphere-packing bounds.
pub fn bounds_audit(n: usize, k: usize, d: usize, q: u64) -> BoundsReport {
    let gs = griesmer_sum(k, d, q);
    let h1 = violates_hamming(n, k, d + 1, q);
    let h2 = violates_hamming(n, k, d + 2, q);
    let class = if h1 {
        SpherePackingClass::Optimal
    } else if h2 {
        SpherePackingClass::AlmostOptimal
    } else {
        SpherePackingClass::Neither
    };
    BoundsReport {
        n,
        k,
        d,
        q,
        griesmer_sum: gs,
        griesmer_met: gs == n as u64,
        griesmer_excludes_d_plus_1: griesmer_sum(k, d + 1, q) > n as u64,
        hamming_excludes_d_plus_1: h1,
        hamming_excludes_d_plus_2: h2,
        sphere_packing_class: class,
        divisor: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        // the bound alone cannot exclude [21,16,4]; only [21,16,5]
        let r = bounds_audit(21, 16, 3, 3);
        assert!(!r.hamming_excludes_d_plus_1 && r.hamming_excludes_d_plus_2);
        assert_eq!(bounds_audit(81, 74, 4, 3).sphere_packing_class, SpherePackingClass::Optimal);
        let ex = bounds_audit(9, 3, 6, 3);
        assert_eq!(ex.griesmer_sum, 9);
        assert!(ex.griesmer_met);
        assert_eq!(bounds_audit(125, 118, 3, 5).sphere_packing_class, SpherePackingClass::AlmostOptimal);
    }

    #[test]
    fn hamming_code_is_perfect() {
        // [13, 10, 3] ternary Hamming code meets the bound with equality
        assert!(!violates_hamming(13, 10, 3, 3));
        assert!(violates_hamming(13, 10, 5, 3));
    }
}
