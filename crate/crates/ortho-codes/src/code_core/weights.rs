//! Exact weight distributions.
//!
//! Counts are arbitrary-precision; in JSON they serialize as an object whose
//! keys are weights and whose values are decimal strings, so no reader ever
//! rounds a large count through a floating-point number.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{OrthoError, Result};

/// Map weight → number of codewords of that weight, for an `[n, k]_q` code.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    #[serde(with = "big_count_map")]
    pub counts: BTreeMap<usize, BigUint>,
}

impl WeightDistribution {
    /// Build from `(weight, count)` pairs, dropping zero counts and merging
    /// repeated weights.
    pub fn from_pairs(n: usize, k: usize, q: u64, pairs: impl IntoIterator<Item = (usize, BigUint)>) -> Self {
        let mut counts: BTreeMap<usize, BigUint> = BTreeMap::new();
        for (w, c) in pairs {
            if !c.is_zero() {
                *counts.entry(w).or_default() += c;
            }
        }
        WeightDistribution { n, k, q, counts }
    }

    /// Build from a dense histogram indexed by weight.
    pub fn from_histogram(n: usize, k: usize, q: u64, hist: &[u64]) -> Self {
        Self::from_pairs(n, k, q, hist.iter().enumerate().map(|(w, &c)| (w, BigUint::from(c))))
    }

    /// The distribution of the zero code of length `n`.
    pub fn zero_code(n: usize, q: u64) -> Self {
        Self::from_pairs(n, 0, q, [(0, BigUint::one())])
    }

    /// `A_w` (zero when absent).
    pub fn count(&self, w: usize) -> BigUint {
        self.counts.get(&w).cloned().unwrap_or_default()
    }

    /// `Σ_w A_w`.
    pub fn total(&self) -> BigUint {
        self.counts.values().sum()
    }

    /// `q^k`.
    pub fn codebook_size(&self) -> BigUint {
        BigUint::from(self.q).pow(self.k as u32)
    }

    /// Check `Σ A_w = q^k`, `A_0 = 1` and all weights in `[0, n]`.
    pub fn validate(&self) -> Result<()> {
        if self.count(0) != BigUint::one() {
            return Err(OrthoError::InconsistentDistribution(format!("A_0 = {}", self.count(0))));
        }
        if let Some(&w) = self.counts.keys().next_back().filter(|&&w| w > self.n) {
            return Err(OrthoError::InconsistentDistribution(format!("weight {w} exceeds length {}", self.n)));
        }
        if self.total() != self.codebook_size() {
            return Err(OrthoError::InconsistentDistribution(format!(
                "total {} differs from q^k = {}",
                self.total(),
                self.codebook_size()
            )));
        }
        Ok(())
    }

    /// Nonzero weights that occur, increasing.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.keys().copied().filter(|&w| w > 0).collect()
    }

    /// Minimum nonzero weight (`None` for the zero code).
    pub fn min_distance(&self) -> Option<usize> {
        self.nonzero_weights().first().copied()
    }

    /// Divisor Δ: gcd of the nonzero weights, `0` for the zero code.
    pub fn divisor(&self) -> u64 {
        self.nonzero_weights().iter().fold(0u64, |g, &w| g.gcd(&(w as u64)))
    }

    /// Whether every codeword weight is a multiple of `m`.
    pub fn is_divisible_by(&self, m: u64) -> bool {
        self.nonzero_weights().iter().all(|&w| (w as u64).is_multiple_of(m))
    }

    /// Number of distinct nonzero weights.
    pub fn weight_count(&self) -> usize {
        self.nonzero_weights().len()
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|(w, c)| format!("{w}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Serde adapter: `BTreeMap<usize, BigUint>` ↔ `{"w": "count", …}`.
pub mod big_count_map {
    use std::collections::BTreeMap;

    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(map: &BTreeMap<usize, BigUint>, s: S) -> Result<S::Ok, S::Error> {
        // numeric key order, not the string order a String-keyed map would give
        OrderedMap(map.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, BigUint>, D::Error> {
        let m: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        m.into_iter()
            .map(|(k, v)| {
                let w = k.parse::<usize>().map_err(D::Error::custom)?;
                let c = v.parse::<BigUint>().map_err(D::Error::custom)?;
                Ok((w, c))
            })
            .collect()
    }

    struct OrderedMap(Vec<(String, String)>);

    impl Serialize for OrderedMap {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            use serde::ser::SerializeMap;
            let mut m = s.serialize_map(Some(self.0.len()))?;
            for (k, v) in &self.0 {
                m.serialize_entry(k, v)?;
            }
            m.end()
        }
    }
}

/// Serde adapter: `BigUint` ↔ decimal string.
pub mod big_uint_string {
    use num_bigint::BigUint;
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> WeightDistribution {
        WeightDistribution::from_histogram(9, 3, 3, &[1, 0, 0, 0, 0, 0, 24, 0, 0, 2])
    }

    #[test]
    fn divisor_and_min_distance() {
        let wd = example();
        wd.validate().unwrap();
        assert_eq!(wd.divisor(), 3);
        assert_eq!(wd.min_distance(), Some(6));
        assert_eq!(WeightDistribution::zero_code(4, 3).divisor(), 0);
    }

    #[test]
    fn json_roundtrip_uses_string_counts() {
        let wd = example();
        let js = serde_json::to_string(&wd).unwrap();
        assert!(js.contains(r#""counts":{"0":"1","6":"24","9":"2"}"#), "{js}");
        let back: WeightDistribution = serde_json::from_str(&js).unwrap();
        assert_eq!(back, wd);
    }

    #[test]
    fn validation_catches_bad_totals() {
        let bad = WeightDistribution::from_histogram(9, 3, 3, &[1, 0, 0, 0, 0, 0, 24, 0, 0, 1]);
        assert!(bad.validate().is_err());
    }
}
