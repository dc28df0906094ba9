//! The embedded expectation set: published parameters and spot values keyed
//! by family instance, each row carrying a descriptive citation.
//!
//! Numbers quoted from the literature live in `data/expectations.json`, not
//! in code; the verification pipeline compares them against enumeration
//! alongside the closed-form predictions.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::code_core::bounds::SpherePackingClass;
use crate::code_core::weights::big_count_map;
use crate::error::{OrthoError, Result};
use crate::families::{Family, FamilyParams};

const EMBEDDED: &str = include_str!("../../data/expectations.json");

/// Published `[n, k, d]` parameters, any of which may be absent, with an
/// optional optimality label.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRow {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    /// `optimal` or `almost-optimal`, as labelled in the source table.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub optimality: Option<SpherePackingClass>,
}

/// A published support design `t-(n, κ, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedDesign {
    pub in_dual: bool,
    pub t: usize,
    pub kappa: usize,
    #[serde(with = "crate::code_core::weights::big_uint_string")]
    pub lambda: BigUint,
}

/// One expectation row.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    /// Family parameter string, `family=<id> key=value …`.
    pub params: String,
    /// Where the values come from, in words.
    pub citation: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub code: Option<ParamRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dual: Option<ParamRow>,
    /// Spot values `A_w` (a complete distribution when `A_0` is listed and
    /// the counts sum to `q^k`).
    #[serde(default, with = "big_count_map", skip_serializing_if = "BTreeMap::is_empty")]
    pub weights: BTreeMap<usize, BigUint>,
    /// Spot values `A⊥_i`.
    #[serde(default, with = "big_count_map", skip_serializing_if = "BTreeMap::is_empty")]
    pub dual_coefficients: BTreeMap<usize, BigUint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub self_orthogonal: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub contains_all_ones: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub designs: Vec<ExpectedDesign>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub locality: Option<usize>,
}

impl Expectation {
    /// The parsed parameter string.
    pub fn family_params(&self) -> Result<FamilyParams> {
        FamilyParams::parse(&self.params)
    }
}

/// All expectation rows, indexed by validated family instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectationSet {
    pub entries: Vec<Expectation>,
}

impl ExpectationSet {
    /// Parse an expectation document; every row must name a valid family
    /// instance, carry a citation, and appear once.
    pub fn from_json(text: &str) -> Result<Self> {
        let set: ExpectationSet = serde_json::from_str(text).map_err(|e| OrthoError::Parse(e.to_string()))?;
        let mut seen: Vec<Family> = Vec::new();
        for entry in &set.entries {
            if entry.citation.trim().is_empty() {
                return Err(OrthoError::Parse(format!("expectation '{}' has no citation", entry.params)));
            }
            let family = entry.family_params()?.resolve()?;
            if seen.contains(&family) {
                return Err(OrthoError::Parse(format!("duplicate expectation '{}'", entry.params)));
            }
            seen.push(family);
        }
        Ok(set)
    }

    /// The set compiled into the binary.
    pub fn embedded() -> &'static ExpectationSet {
        static SET: OnceLock<ExpectationSet> = OnceLock::new();
        SET.get_or_init(|| ExpectationSet::from_json(EMBEDDED).expect("embedded expectations are valid"))
    }

    /// The row for a family instance, matched on validated parameters (so
    /// `q=27` finds `p=3 e=3`).
    pub fn lookup(&self, params: &FamilyParams) -> Option<&Expectation> {
        let family = params.resolve().ok()?;
        self.entries.iter().find(|e| e.family_params().and_then(|p| p.resolve()).is_ok_and(|f| f == family))
    }

    /// Rows carrying a code or dual optimality label.
    pub fn optimal_table_rows(&self) -> impl Iterator<Item = (&Expectation, bool, &ParamRow)> {
        self.entries.iter().flat_map(|e| {
            [(false, &e.code), (true, &e.dual)]
                .into_iter()
                .filter_map(move |(dual, row)| row.as_ref().filter(|r| r.optimality.is_some()).map(|r| (e, dual, r)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_set_is_well_formed() {
        let set = ExpectationSet::embedded();
        assert!(set.entries.iter().all(|e| !e.citation.is_empty()));
        assert_eq!(set.optimal_table_rows().count(), 18);
    }

    #[test]
    fn lookup_matches_resolved_parameters() {
        let set = ExpectationSet::embedded();
        let fp = FamilyParams::parse("family=grs p=3 e=3 k=3").unwrap();
        assert_eq!(set.lookup(&fp).unwrap().weights.len(), 4);
        assert!(set.lookup(&FamilyParams::parse("family=c3 q=3 m=3").unwrap()).is_none());
    }

    #[test]
    fn rejects_rows_without_citation() {
        let doc = r#"{"entries":[{"params":"family=example q=3 m=3","citation":" "}]}"#;
        assert!(ExpectationSet::from_json(doc).is_err());
    }
}
