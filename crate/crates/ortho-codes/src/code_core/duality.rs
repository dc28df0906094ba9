//! MacWilliams transform and Pless power moments, in exact integers.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::code_core::weights::{big_count_map, WeightDistribution};
use crate::error::{OrthoError, Result};

/// The dual distribution and the facts usually quoted about it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualSummary {
    /// Exact weight distribution of `C⊥` (dimension `n − k`).
    pub distribution: WeightDistribution,
    /// Minimum distance of `C⊥` (`None` when `C⊥ = {0}`).
    pub d_perp: Option<usize>,
    /// `A⊥_1 … A⊥_6` (zeros included).
    #[serde(with = "big_count_map")]
    pub low: BTreeMap<usize, BigUint>,
}

impl DualSummary {
    /// `A⊥_i` (zero when absent).
    pub fn a(&self, i: usize) -> BigUint {
        self.distribution.count(i)
    }
}

/// Binomial coefficients `C(a, b)` for `0 ≤ b ≤ a ≤ n`.
fn binomials(n: usize) -> Vec<Vec<BigInt>> {
    let mut t: Vec<Vec<BigInt>> = Vec::with_capacity(n + 1);
    for a in 0..=n {
        let mut row = vec![BigInt::one(); a + 1];
        for b in 1..a {
            row[b] = &t[a - 1][b - 1] + &t[a - 1][b];
        }
        t.push(row);
    }
    t
}

/// Krawtchouk values `K_j(i) = Σ_s (−1)^s (q−1)^{j−s} C(i,s) C(n−i,j−s)` for
/// all `j ≤ n` at a fixed `i`.
fn krawtchouk_column(n: usize, i: usize, binom: &[Vec<BigInt>], qm1_pow: &[BigInt]) -> Vec<BigInt> {
    (0..=n)
        .map(|j| {
            let mut acc = BigInt::zero();
            for s in 0..=j.min(i) {
                if j - s > n - i {
                    continue;
                }
                let term = &binom[i][s] * &binom[n - i][j - s] * &qm1_pow[j - s];
                if s % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        })
        .collect()
}

/// Exact MacWilliams transform. Every dual coefficient must divide out `q^k`
/// exactly and be non-negative; otherwise the input is inconsistent.
pub fn macwilliams(wd: &WeightDistribution) -> Result<DualSummary> {
    wd.validate()?;
    let (n, q) = (wd.n, wd.q);
    let binom = binomials(n);
    let qm1_pow: Vec<BigInt> = (0..=n).map(|e| BigInt::from(q - 1).pow(e as u32)).collect();
    let mut sums = vec![BigInt::zero(); n + 1];
    for (&i, a) in &wd.counts {
        let a = BigInt::from_biguint(Sign::Plus, a.clone());
        for (j, kv) in krawtchouk_column(n, i, &binom, &qm1_pow).into_iter().enumerate() {
            sums[j] += &a * kv;
        }
    }
    let qk = BigInt::from(q).pow(wd.k as u32);
    let mut pairs = Vec::new();
    for (j, s) in sums.into_iter().enumerate() {
        let (quot, rem) = (&s / &qk, &s % &qk);
        if !rem.is_zero() || quot.is_negative() {
            return Err(OrthoError::InconsistentDistribution(format!(
                "dual coefficient A⊥_{j} = {s}/{qk} is not a non-negative integer"
            )));
        }
        pairs.push((j, quot.to_biguint().expect("non-negative")));
    }
    let distribution = WeightDistribution::from_pairs(n, n - wd.k, q, pairs);
    distribution.validate()?;
    let d_perp = distribution.min_distance();
    let low = (1..=6).map(|i| (i, distribution.count(i))).collect();
    Ok(DualSummary { distribution, d_perp, low })
}

/// Outcome of checking the first four Pless power moments.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlessCheck {
    /// All four identities hold.
    pub passed: bool,
    /// Index `ν ∈ {0,1,2,3}` of the first violated identity `Σ i^ν A_i = …`.
    pub first_violation: Option<usize>,
}

/// Check the first four Pless power moments of `wd` against supplied dual
/// coefficients `A⊥_1, A⊥_2, A⊥_3`. Both sides are scaled by `q³` so that the
/// identities stay integral for `k < 3`.
pub fn pless_verify(wd: &WeightDistribution, a1: &BigUint, a2: &BigUint, a3: &BigUint) -> PlessCheck {
    let q = BigInt::from(wd.q);
    let n = BigInt::from(wd.n);
    let (a1, a2, a3) = (BigInt::from(a1.clone()), BigInt::from(a2.clone()), BigInt::from(a3.clone()));
    let moment = |nu: u32| -> BigInt {
        wd.counts.iter().map(|(&i, a)| BigInt::from(i).pow(nu) * BigInt::from(a.clone())).sum::<BigInt>()
            * q.clone().pow(3u32)
    };
    // q^{k+3−ν} · bracket_ν
    let scale = |nu: u32| q.clone().pow(wd.k as u32 + 3 - nu);
    let one = BigInt::one();
    let two = BigInt::from(2);
    let qn = &q * &n;
    let rhs = [
        scale(0),
        scale(1) * (&qn - &n - &a1),
        scale(2) * ((&q - &one) * &n * (&qn - &n + &one) - (&two * &qn - &q - &two * &n + &two) * &a1 + &two * &a2),
        scale(3)
            * ((&q - &one)
                * &n
                * (&q * &q * &n * &n - &two * &q * &n * &n + BigInt::from(3) * &qn - &q + &n * &n
                    - BigInt::from(3) * &n
                    + &two)
                - (BigInt::from(3) * &q * &q * &n * &n
                    - BigInt::from(3) * &q * &q * &n
                    - BigInt::from(6) * &q * &n * &n
                    + BigInt::from(12) * &qn
                    + &q * &q
                    - BigInt::from(6) * &q
                    + BigInt::from(3) * &n * &n
                    - BigInt::from(9) * &n
                    + BigInt::from(6))
                    * &a1
                + BigInt::from(6) * (&qn - &q - &n + &two) * &a2
                - BigInt::from(6) * &a3),
    ];
    let first_violation = (0..4).find(|&nu| moment(nu as u32) != rhs[nu]);
    PlessCheck { passed: first_violation.is_none(), first_violation }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::code_core::code::LinearCode;
    use crate::code_core::enumerate::{weight_distribution, EnumOptions};
    use crate::galois::FieldSpec;

    fn enumerate(code: &LinearCode) -> WeightDistribution {
        weight_distribution(code, &EnumOptions::with_budget(1 << 24)).unwrap()
    }

    fn sample() -> LinearCode {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        LinearCode::new(
            f,
            8,
            vec![vec![1, 0, 0, 1, 2, 1, 0, 2], vec![0, 1, 0, 2, 2, 1, 1, 0], vec![0, 0, 1, 1, 1, 2, 2, 2]],
        )
        .unwrap()
    }

    #[test]
    fn transform_matches_enumerated_dual() {
        let code = sample();
        let dual = macwilliams(&enumerate(&code)).unwrap();
        assert_eq!(dual.distribution, enumerate(&code.dual()));
    }

    #[test]
    fn involution() {
        let wd = enumerate(&sample());
        let back = macwilliams(&macwilliams(&wd).unwrap().distribution).unwrap().distribution;
        assert_eq!(back, wd);
    }

    #[test]
    fn whole_space_and_zero_code() {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let full = enumerate(&LinearCode::full_space(f, 3).unwrap());
        let dual = macwilliams(&full).unwrap();
        assert_eq!(dual.distribution, WeightDistribution::zero_code(3, 3));
        assert_eq!(dual.d_perp, None);
    }

    #[test]
    fn inconsistent_input_is_rejected() {
        // total 27 but not a code: transform is not integral
        let wd = WeightDistribution::from_histogram(3, 3, 3, &[1, 0, 26, 0]);
        assert!(macwilliams(&wd).is_err());
    }

    #[test]
    fn pless_against_enumerated_dual() {
        let code = sample();
        let wd = enumerate(&code);
        let d = enumerate(&code.dual());
        assert!(pless_verify(&wd, &d.count(1), &d.count(2), &d.count(3)).passed);
        let off = pless_verify(&wd, &d.count(1), &d.count(2), &(d.count(3) + 1u32));
        assert_eq!(off.first_violation, Some(3));
    }

    #[test]
    fn pless_zero_code() {
        let wd = WeightDistribution::zero_code(4, 3);
        // dual is the full space GF(3)^4: A_i = C(4,i) 2^i
        let check = pless_verify(&wd, &BigUint::from(8u32), &BigUint::from(24u32), &BigUint::from(32u32));
        assert!(check.passed);
    }
}
