//! Audits of the sufficient conditions for self-orthogonality: divisibility,
//! projective two-weight codes and Griesmer codes.
//!
//! Each audit evaluates its hypotheses on a concrete code and either confirms
//! the conclusion, reports that it does not apply, or — the only failing
//! outcome — reports a violation.

use serde::{Deserialize, Serialize};

use crate::code_core::bounds::griesmer_sum;
use crate::code_core::code::LinearCode;
use crate::code_core::projective::projectivity;
use crate::code_core::weights::WeightDistribution;

/// Result category of an audit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditOutcome {
    /// Hypotheses hold and the conclusion was verified.
    Confirmed,
    /// A hypothesis fails, so the implication holds vacuously.
    Vacuous,
    /// The conclusion holds without the hypothesis (the condition is
    /// sufficient, not necessary); logged, not a failure.
    ConverseCounterexample,
    /// The parameters fall under a stated exception.
    Exempt,
    /// The audit's setting does not cover this code.
    NotApplicable,
    /// Hypotheses hold but the conclusion is false.
    Violated,
}

/// One audit result with the predicates it evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditRecord {
    pub audit: String,
    pub outcome: AuditOutcome,
    pub detail: String,
    pub contains_all_ones: bool,
    pub divisor: u64,
    pub self_orthogonal: bool,
}

impl AuditRecord {
    /// Everything but a violation.
    pub fn holds(&self) -> bool {
        self.outcome != AuditOutcome::Violated
    }

    fn new(audit: &str, code: &LinearCode, wd: &WeightDistribution) -> Self {
        AuditRecord {
            audit: audit.to_string(),
            outcome: AuditOutcome::NotApplicable,
            detail: String::new(),
            contains_all_ones: code.contains_all_ones(),
            divisor: wd.divisor(),
            self_orthogonal: code.is_self_orthogonal(),
        }
    }

    fn with(mut self, outcome: AuditOutcome, detail: impl Into<String>) -> Self {
        self.outcome = outcome;
        self.detail = detail.into();
        self
    }
}

/// `1 ∈ C` and `p`-divisible ⇒ self-orthogonal (odd characteristic).
pub fn check_divisible_so_theorem(code: &LinearCode, wd: &WeightDistribution) -> AuditRecord {
    let rec = AuditRecord::new("divisible-implies-self-orthogonal", code, wd);
    let p = code.field().p() as u64;
    if p == 2 {
        return rec.with(AuditOutcome::NotApplicable, "characteristic 2");
    }
    let p_div = wd.is_divisible_by(p);
    match (rec.contains_all_ones && p_div, rec.self_orthogonal) {
        (true, true) => rec.with(AuditOutcome::Confirmed, format!("1 ∈ C, {p}-divisible, self-orthogonal")),
        (true, false) => rec.with(AuditOutcome::Violated, format!("1 ∈ C and {p}-divisible but not self-orthogonal")),
        (false, true) if !p_div => {
            let d = rec.divisor;
            rec.with(
                AuditOutcome::ConverseCounterexample,
                format!("self-orthogonal with divisor {d}, not {p}-divisible"),
            )
        }
        (false, _) => {
            let why = if !rec.contains_all_ones { "1 ∉ C" } else { "not p-divisible" };
            rec.with(AuditOutcome::Vacuous, why)
        }
    }
}

/// Whether `[n, k]_q` with nonzero weights `weights` has MacDonald parameters
/// `[(q^k − q)/(q − 1), k]` with weights `{q^{k−1} − 1, q^{k−1}}`.
pub fn macdonald_match(n: usize, k: usize, q: u64, weights: &[usize]) -> bool {
    let Some(qk) = q.checked_pow(k as u32) else {
        return false;
    };
    let top = qk / q;
    n as u64 == (qk - q) / (q - 1) && weights.len() == 2 && weights[0] as u64 == top - 1 && weights[1] as u64 == top
}

/// Projective two-weight codes (`k ≥ 3`) are `p`-divisible unless MacDonald;
/// with `1 ∈ C` they are self-orthogonal.
pub fn audit_projective_two_weight(code: &LinearCode, wd: &WeightDistribution) -> AuditRecord {
    let rec = AuditRecord::new("projective-two-weight", code, wd);
    let proj = projectivity(code);
    if !proj.is_projective() {
        return rec.with(AuditOutcome::NotApplicable, format!("not projective ({proj:?})"));
    }
    let weights = wd.nonzero_weights();
    if weights.len() != 2 {
        return rec.with(AuditOutcome::NotApplicable, format!("{} nonzero weights (needs exactly two)", weights.len()));
    }
    if code.k() < 3 {
        return rec.with(AuditOutcome::NotApplicable, "dimension below 3");
    }
    let (p, q) = (code.field().p() as u64, code.q() as u64);
    if macdonald_match(code.n(), code.k(), q, &weights) {
        return rec.with(AuditOutcome::Exempt, format!("MacDonald parameters with weights {weights:?}"));
    }
    if !wd.is_divisible_by(p) {
        return rec.with(AuditOutcome::Violated, format!("weights {weights:?} not divisible by {p}"));
    }
    if !rec.contains_all_ones {
        return rec.with(AuditOutcome::Confirmed, format!("{p}-divisible with weights {weights:?}; 1 ∉ C"));
    }
    if rec.self_orthogonal {
        rec.with(AuditOutcome::Confirmed, format!("{p}-divisible with weights {weights:?}, 1 ∈ C, self-orthogonal"))
    } else {
        rec.with(AuditOutcome::Violated, "1 ∈ C but not self-orthogonal")
    }
}

/// Griesmer codes over `GF(p)` with `p | d` and `1 ∈ C` are
/// `p^e`-divisible (`p^e ‖ d`) and self-orthogonal.
pub fn audit_griesmer(code: &LinearCode, wd: &WeightDistribution) -> AuditRecord {
    let rec = AuditRecord::new("griesmer", code, wd);
    if !code.gf().is_prime_field() {
        return rec.with(AuditOutcome::NotApplicable, "alphabet is not a prime field");
    }
    let Some(d) = wd.min_distance() else {
        return rec.with(AuditOutcome::NotApplicable, "zero code");
    };
    let p = code.field().p() as u64;
    let gs = griesmer_sum(code.k(), d, p);
    if gs != code.n() as u64 {
        return rec.with(AuditOutcome::NotApplicable, format!("not a Griesmer code (Griesmer sum {gs} ≠ n)"));
    }
    if !(d as u64).is_multiple_of(p) {
        return rec.with(AuditOutcome::Vacuous, format!("{p} ∤ d = {d}"));
    }
    if !rec.contains_all_ones {
        return rec.with(AuditOutcome::Vacuous, "1 ∉ C");
    }
    let mut pe = 1;
    while (d as u64).is_multiple_of(pe * p) {
        pe *= p;
    }
    match (wd.is_divisible_by(pe), rec.self_orthogonal) {
        (true, true) => rec.with(AuditOutcome::Confirmed, format!("Griesmer, {pe}-divisible, self-orthogonal")),
        (div, so) => rec.with(AuditOutcome::Violated, format!("{pe}-divisible: {div}, self-orthogonal: {so}")),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::code_core::enumerate::{weight_distribution, EnumOptions};
    use crate::families::{build_family, FamilyParams};
    use crate::galois::FieldSpec;

    fn wd(code: &LinearCode) -> WeightDistribution {
        weight_distribution(code, &EnumOptions::default()).unwrap()
    }

    /// Columns = points of PG(2,3), optionally minus `[1,0,0]`: the ternary
    /// simplex code [13,3] or the [12,3] MacDonald code.
    fn plane_code(drop_point: bool) -> LinearCode {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let mut points = Vec::new();
        for x in 0..27u8 {
            let v = [x % 3, x / 3 % 3, x / 9];
            let lead = v.iter().find(|&&c| c != 0);
            if lead == Some(&1) && !(drop_point && v == [1, 0, 0]) {
                points.push(v);
            }
        }
        let rows = (0..3).map(|i| points.iter().map(|v| v[i]).collect()).collect();
        LinearCode::new(f, points.len(), rows).unwrap()
    }

    fn macdonald_12_3() -> LinearCode {
        plane_code(true)
    }

    #[test]
    fn macdonald_exemption() {
        let code = macdonald_12_3();
        let w = wd(&code);
        assert_eq!(w.nonzero_weights(), vec![8, 9]);
        assert_eq!(audit_projective_two_weight(&code, &w).outcome, AuditOutcome::Exempt);
    }

    #[test]
    fn example_code_audits() {
        let code = build_family(&FamilyParams::parse("family=example q=3 m=3").unwrap()).unwrap();
        let w = wd(&code);
        assert_eq!(audit_projective_two_weight(&code, &w).outcome, AuditOutcome::Confirmed);
        assert_eq!(audit_griesmer(&code, &w).outcome, AuditOutcome::Confirmed);
        assert_eq!(check_divisible_so_theorem(&code, &w).outcome, AuditOutcome::Confirmed);
    }

    #[test]
    fn grs_is_a_converse_counterexample() {
        let code = build_family(&FamilyParams::parse("family=grs q=27 k=3").unwrap()).unwrap();
        let rec = check_divisible_so_theorem(&code, &wd(&code));
        assert_eq!(rec.outcome, AuditOutcome::ConverseCounterexample);
        assert!(rec.holds() && rec.contains_all_ones && rec.self_orthogonal && rec.divisor == 1);
    }

    #[test]
    fn trivial_cases() {
        let f = Arc::new(FieldSpec::new(3, 1).unwrap());
        let full = LinearCode::full_space(f.clone(), 2).unwrap();
        assert_eq!(check_divisible_so_theorem(&full, &wd(&full)).outcome, AuditOutcome::Vacuous);
        let simplex = plane_code(false);
        let w = wd(&simplex);
        assert_eq!(w.nonzero_weights(), vec![9]);
        assert_eq!(audit_projective_two_weight(&simplex, &w).outcome, AuditOutcome::NotApplicable);
        // d not divisible by p
        let rep = LinearCode::new(f, 2, vec![vec![1, 1]]).unwrap();
        assert_eq!(audit_griesmer(&rep, &wd(&rep)).outcome, AuditOutcome::Vacuous);
    }
}
