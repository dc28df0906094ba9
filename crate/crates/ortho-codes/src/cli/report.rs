//! The verification report: every computed quantity, the comparison against
//! predictions and published values, explicit budget skips, and timing.
//!
//! The JSON form is the document model itself (serde), so parsing an emitted
//! report yields an identical value; big counts are decimal strings. The TSV
//! form is a flat `section <TAB> key <TAB> value…` listing for shell tools.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::analysis::{AuditRecord, DesignWitness, RepairSet};
use crate::code_core::bounds::{BoundsReport, SpherePackingClass};
use crate::code_core::duality::PlessCheck;
use crate::code_core::weights::{big_count_map, WeightDistribution};
use crate::error::{OrthoError, Result};
use crate::families::{FamilyId, FamilyParams};

/// Overall verdict of one report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    /// Every computed quantity matches every prediction and expectation.
    Pass,
    /// At least one delta.
    Mismatch,
    /// No delta, but at least one check was skipped over budget.
    Skipped,
}

impl Status {
    /// Process exit code: 0 pass, 2 mismatch, 3 skipped over budget.
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Mismatch => 2,
            Status::Skipped => 3,
        }
    }

    /// The worst of several statuses (mismatch over skip over pass).
    pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
        statuses.into_iter().fold(Status::Pass, |acc, s| match (acc, s) {
            (Status::Mismatch, _) | (_, Status::Mismatch) => Status::Mismatch,
            (Status::Skipped, _) | (_, Status::Skipped) => Status::Skipped,
            _ => Status::Pass,
        })
    }
}

/// Computed `[n, k, d]_q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputedParams {
    pub n: usize,
    pub k: usize,
    /// `None` when enumeration was skipped or the code is zero.
    pub d: Option<usize>,
    pub q: u64,
}

/// Facts about the dual code read off the exact MacWilliams transform.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualReport {
    pub n: usize,
    pub k: usize,
    pub d_perp: Option<usize>,
    /// `A⊥_1 … A⊥_6`.
    #[serde(with = "big_count_map")]
    pub low: BTreeMap<usize, BigUint>,
}

/// Whether the sphere-packing rule reproduces a published optimality label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassificationVerdict {
    /// The rule yields the published label.
    Confirmed,
    /// The rule yields a different label. The bound is one-sided, so this
    /// neither confirms nor refutes the label.
    Inconclusive,
}

/// A published table row replayed against the computed parameters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableReplay {
    /// The row describes the dual code.
    pub dual: bool,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub stated: SpherePackingClass,
    pub hamming_rule: SpherePackingClass,
    pub verdict: ClassificationVerdict,
    pub citation: String,
}

/// Bound audits of the code and its dual, plus table replays.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub code: BoundsReport,
    pub dual: Option<BoundsReport>,
    pub table: Vec<TableReplay>,
}

/// Internal consistency of the enumerated distribution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Consistency {
    /// `Σ A_w = q^k`.
    pub total_is_q_pow_k: bool,
    /// Transforming the dual distribution back yields the original.
    pub macwilliams_involution: bool,
    /// First four Pless moments with the transform's `A⊥_1..3`.
    pub pless: PlessCheck,
}

impl Consistency {
    pub fn holds(&self) -> bool {
        self.total_is_q_pow_k && self.macwilliams_involution && self.pless.passed
    }
}

/// How the locality was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LocalityMethod {
    /// Exhaustive repair-set search over every column.
    Exhaustive,
    /// `d⊥ − 1`, the minimum-weight dual supports covering every coordinate
    /// equally often.
    DualSupports,
}

/// Measured locality.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalityReport {
    pub method: LocalityMethod,
    /// The locality, when found within the search limit.
    pub r: Option<usize>,
    /// The search limit, when some column needs more than this many others.
    pub exceeds: Option<usize>,
    /// Columns by size of their smallest repair set (exhaustive search only).
    pub repair_sizes: BTreeMap<usize, usize>,
    /// One repair set of the largest size (exhaustive search only).
    pub witness: Option<RepairSet>,
    /// Every stated repair combination re-checked against the columns.
    pub verified: bool,
}

/// One disagreement between computed and expected values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Delta {
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    /// The prediction case or the expectation citation.
    pub source: String,
}

/// A check not run because it exceeds the budget.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Skip {
    pub check: String,
    pub reason: String,
}

/// Wall-clock microseconds per pipeline stage.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub stages: BTreeMap<String, u64>,
    pub total_us: u64,
}

/// The full outcome of verifying one family instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: FamilyId,
    pub params: FamilyParams,
    pub status: Status,
    pub computed: ComputedParams,
    pub weight_distribution: Option<WeightDistribution>,
    pub divisor: Option<u64>,
    pub self_orthogonal: bool,
    pub contains_all_ones: bool,
    pub dual: Option<DualReport>,
    pub bounds: Option<BoundsSection>,
    pub audits: Vec<AuditRecord>,
    pub consistency: Option<Consistency>,
    pub designs: Vec<DesignWitness>,
    pub locality: Option<LocalityReport>,
    /// Empty iff the status is not `MISMATCH`.
    pub deltas: Vec<Delta>,
    pub skips: Vec<Skip>,
    pub notes: Vec<String>,
    pub timing: Timing,
}

impl VerificationReport {
    /// Status implied by the deltas and skips.
    pub fn derive_status(&self) -> Status {
        if !self.deltas.is_empty() {
            Status::Mismatch
        } else if !self.skips.is_empty() {
            Status::Skipped
        } else {
            Status::Pass
        }
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| OrthoError::Parse(e.to_string()))
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| OrthoError::Parse(e.to_string()))
    }

    /// Flat tab-separated rendering.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let mut line = |fields: &[&dyn std::fmt::Display]| {
            let cells: Vec<String> = fields.iter().map(|f| f.to_string()).collect();
            let _ = writeln!(out, "{}", cells.join("\t"));
        };
        let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
        let c = &self.computed;
        line(&[&"report", &"params", &self.params]);
        line(&[&"report", &"status", &label(&self.status)]);
        line(&[&"code", &"nkd", &format!("[{},{},{}]", c.n, c.k, opt(c.d))]);
        line(&[&"code", &"q", &c.q]);
        line(&[&"code", &"divisor", &self.divisor.map_or("-".into(), |d| d.to_string())]);
        line(&[&"code", &"self_orthogonal", &self.self_orthogonal]);
        line(&[&"code", &"contains_all_ones", &self.contains_all_ones]);
        if let Some(wd) = &self.weight_distribution {
            for (w, a) in &wd.counts {
                line(&[&"weight", w, a]);
            }
        }
        if let Some(d) = &self.dual {
            line(&[&"dual", &"nkd", &format!("[{},{},{}]", d.n, d.k, opt(d.d_perp))]);
            for (i, a) in &d.low {
                line(&[&"dual", &format!("A{i}"), a]);
            }
        }
        if let Some(b) = &self.bounds {
            line(&[
                &"bounds",
                &"code",
                &b.code.sphere_packing_class.label(),
                &format!("griesmer_met={}", b.code.griesmer_met),
            ]);
            if let Some(db) = &b.dual {
                line(&[&"bounds", &"dual", &db.sphere_packing_class.label()]);
            }
            for t in &b.table {
                let which = if t.dual { "table-dual" } else { "table-code" };
                let verdict = label(&t.verdict);
                line(&[
                    &"bounds",
                    &which,
                    &format!("[{},{},{}]", t.n, t.k, t.d),
                    &t.stated.label(),
                    &t.hamming_rule.label(),
                    &verdict,
                ]);
            }
        }
        for a in &self.audits {
            line(&[&"audit", &a.audit, &label(&a.outcome), &a.detail]);
        }
        if let Some(cs) = &self.consistency {
            line(&[&"consistency", &"holds", &cs.holds()]);
        }
        for d in &self.designs {
            let source = if d.source == crate::analysis::DesignSource::Dual { "dual" } else { "code" };
            let lambda = d.lambda.map_or("-".into(), |l| l.to_string());
            line(&[&"design", &source, &format!("{}-({},{},{})", d.t, d.n, d.kappa, lambda), &d.is_design()]);
        }
        if let Some(l) = &self.locality {
            let value = l.r.map_or_else(|| format!(">{}", l.exceeds.unwrap_or(0)), |r| r.to_string());
            line(&[&"locality", &label(&l.method), &value]);
        }
        for d in &self.deltas {
            line(&[&"delta", &d.quantity, &d.expected, &d.computed, &d.source]);
        }
        for s in &self.skips {
            line(&[&"skip", &s.check, &s.reason]);
        }
        for n in &self.notes {
            line(&[&"note", n]);
        }
        line(&[&"timing", &"total_us", &self.timing.total_us]);
        out
    }
}

/// The serde name of a unit enum variant.
fn label<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_combination_and_exit_codes() {
        assert_eq!(Status::combine([Status::Pass, Status::Skipped]), Status::Skipped);
        assert_eq!(Status::combine([Status::Skipped, Status::Mismatch, Status::Pass]), Status::Mismatch);
        assert_eq!(Status::combine([]), Status::Pass);
        assert_eq!([Status::Pass, Status::Mismatch, Status::Skipped].map(|s| s.exit_code()), [0, 2, 3]);
    }
}
