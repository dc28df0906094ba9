//! The verification pipeline: build → enumerate → dualize → audit → extract
//! designs → measure locality → compare with the closed-form prediction and
//! the embedded expectations.
//!
//! Usage errors (unknown family, violated hypotheses, unreadable function
//! table) abort with an error; every over-budget check is recorded as an
//! explicit skip and the remaining checks still run.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::Pow;

use crate::analysis::{
    audit_griesmer, audit_projective_two_weight, check_divisible_so_theorem, extract_designs, lemma_locality, locality,
    DesignSource,
};
use crate::cli::expectations::{Expectation, ExpectationSet, ParamRow};
use crate::cli::report::{
    BoundsSection, ClassificationVerdict, ComputedParams, Consistency, Delta, DualReport, LocalityMethod,
    LocalityReport, Skip, TableReplay, Timing, VerificationReport,
};
use crate::code_core::bounds::bounds_audit;
use crate::code_core::code::LinearCode;
use crate::code_core::duality::{macwilliams, pless_verify, DualSummary};
use crate::code_core::enumerate::{weight_distribution, EnumOptions, DEFAULT_BUDGET};
use crate::code_core::lowweight::binomial;
use crate::code_core::weights::WeightDistribution;
use crate::error::{OrthoError, Result};
use crate::families::{build, predict_family, FamilyParams, Prediction};

/// Pipeline settings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Step budget shared by enumeration, design extraction and locality
    /// search (each check is budgeted separately).
    pub budget: u64,
    pub workers: usize,
    /// Compare against predictions and expectations (`false` for a plain
    /// analysis report).
    pub compare: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: DEFAULT_BUDGET, workers: EnumOptions::default().workers, compare: true }
    }
}

/// Accumulates report sections and stage timings.
struct Run {
    deltas: Vec<Delta>,
    skips: Vec<Skip>,
    notes: Vec<String>,
    stages: BTreeMap<String, u64>,
}

impl Run {
    fn timed<T>(&mut self, stage: &str, f: impl FnOnce() -> T) -> T {
        let t = Instant::now();
        let out = f();
        *self.stages.entry(stage.to_string()).or_default() += t.elapsed().as_micros() as u64;
        out
    }

    fn expect<T: PartialEq + ToString>(&mut self, quantity: &str, expected: &T, computed: &T, source: &str) {
        if expected != computed {
            self.delta(quantity, expected.to_string(), computed.to_string(), source);
        }
    }

    fn delta(&mut self, quantity: &str, expected: String, computed: String, source: &str) {
        self.deltas.push(Delta { quantity: quantity.into(), expected, computed, source: source.into() });
    }

    fn skip(&mut self, check: &str, reason: impl Into<String>) {
        self.skips.push(Skip { check: check.into(), reason: reason.into() });
    }
}

fn show_opt(x: Option<usize>) -> String {
    x.map_or_else(|| "none".to_string(), |v| v.to_string())
}

/// Verify one family instance against the embedded expectation set.
pub fn verify_family(params: &FamilyParams, opts: &VerifyOptions) -> Result<VerificationReport> {
    verify_with(params, opts, ExpectationSet::embedded())
}

/// Verify one family instance against a given expectation set.
pub fn verify_with(params: &FamilyParams, opts: &VerifyOptions, set: &ExpectationSet) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut run = Run { deltas: Vec::new(), skips: Vec::new(), notes: Vec::new(), stages: BTreeMap::new() };
    let family = params.resolve()?;
    let code = run.timed("build", || build(&family))?;
    let (prediction, expectation) =
        if opts.compare { (predict(params, &mut run), set.lookup(params)) } else { (None, None) };
    let (n, k, q) = (code.n(), code.k(), code.q() as u64);
    let self_orthogonal = code.is_self_orthogonal();
    let contains_all_ones = code.contains_all_ones();

    let enum_opts = EnumOptions { budget: opts.budget, workers: opts.workers };
    let wd = match run.timed("enumerate", || weight_distribution(&code, &enum_opts)) {
        Ok(wd) => Some(wd),
        Err(e @ OrthoError::BudgetExceeded { .. }) => {
            run.skip("weight enumeration", format!("{e}; distribution-dependent checks skipped"));
            None
        }
        Err(e) => return Err(e),
    };
    let dual = match &wd {
        Some(wd) => Some(run.timed("macwilliams", || macwilliams(wd))?),
        None => None,
    };
    let d = wd.as_ref().and_then(|w| w.min_distance());
    let consistency =
        wd.as_ref().zip(dual.as_ref()).map(|(wd, dual)| run.timed("consistency", || consistency(wd, dual)));
    if consistency.as_ref().is_some_and(|c| !c.holds()) {
        run.delta(
            "distribution consistency",
            "Σ = q^k, involution, Pless".into(),
            format!("{consistency:?}"),
            "identity",
        );
    }
    let audits = wd
        .as_ref()
        .map(|wd| {
            vec![
                check_divisible_so_theorem(&code, wd),
                audit_projective_two_weight(&code, wd),
                audit_griesmer(&code, wd),
            ]
        })
        .unwrap_or_default();
    for a in audits.iter().filter(|a| !a.holds()) {
        run.delta(&format!("audit {}", a.audit), "no violation".into(), a.detail.clone(), "theorem audit");
    }
    let bounds = d.map(|d| {
        let mut code_bounds = bounds_audit(n, k, d, q);
        code_bounds.divisor = wd.as_ref().map(|w| w.divisor());
        let dual_bounds = dual.as_ref().and_then(|s| s.d_perp).map(|dp| bounds_audit(n, n - k, dp, q));
        BoundsSection { code: code_bounds, dual: dual_bounds, table: Vec::new() }
    });

    let mut report = VerificationReport {
        family: params.family,
        params: params.clone(),
        status: crate::cli::report::Status::Pass,
        computed: ComputedParams { n, k, d, q },
        divisor: wd.as_ref().map(|w| w.divisor()),
        self_orthogonal,
        contains_all_ones,
        dual: dual.as_ref().map(|s| DualReport { n, k: n - k, d_perp: s.d_perp, low: s.low.clone() }),
        bounds,
        audits,
        consistency,
        designs: Vec::new(),
        locality: None,
        weight_distribution: wd,
        deltas: Vec::new(),
        skips: Vec::new(),
        notes: Vec::new(),
        timing: Timing::default(),
    };

    if let Some(pr) = &prediction {
        compare_prediction(&mut run, &report, pr, dual.as_ref());
    }
    if let Some(ex) = expectation {
        compare_expectation(&mut run, &mut report, ex);
    }
    if let (Some(wd), Some(dual)) = (&report.weight_distribution, &dual) {
        report.designs = check_designs(&mut run, &code, wd, dual, prediction.as_ref(), expectation, opts.budget);
    }
    let claims: Vec<(usize, String)> = prediction
        .iter()
        .filter_map(|p| p.locality.map(|r| (r, format!("closed-form prediction ({})", p.case))))
        .chain(expectation.and_then(|e| e.locality.map(|r| (r, e.citation.clone()))))
        .collect();
    if let Some(r_max) = claims.iter().map(|c| c.0).max() {
        let d_perp = dual.as_ref().and_then(|s| s.d_perp);
        match run.timed("locality", || measure_locality(&code, r_max + 1, d_perp, opts.budget)) {
            Ok(lr) => {
                for (r, source) in &claims {
                    if lr.r != Some(*r) {
                        let computed = lr.r.map_or_else(|| format!("> {}", r_max + 1), |v| v.to_string());
                        run.delta("locality", r.to_string(), computed, source);
                    }
                }
                if !lr.verified {
                    run.delta(
                        "locality witness",
                        "verified repair sets".into(),
                        "verification failed".into(),
                        "search",
                    );
                }
                report.locality = Some(lr);
            }
            Err(reason) => run.skip("locality", reason),
        }
    }

    report.timing = Timing { stages: run.stages, total_us: start.elapsed().as_micros() as u64 };
    report.deltas = run.deltas;
    report.skips = run.skips;
    report.notes = run.notes;
    report.status = report.derive_status();
    Ok(report)
}

fn predict(params: &FamilyParams, run: &mut Run) -> Option<Prediction> {
    match run.timed("predict", || predict_family(params)) {
        Ok(p) => {
            run.notes.push(format!("prediction case {}", p.case));
            if let Some(sd) = p.stated_d {
                run.notes.push(format!(
                    "stated minimum distance {sd} differs from the table's smallest weight {}",
                    show_opt(p.d)
                ));
            }
            run.notes.extend(p.notes.iter().cloned());
            Some(p)
        }
        Err(OrthoError::NoPrediction(why)) => {
            run.notes.push(format!("no closed-form prediction: {why}"));
            None
        }
        Err(e) => {
            run.delta("prediction", "an integral closed form".into(), e.to_string(), "closed-form prediction");
            None
        }
    }
}

fn consistency(wd: &WeightDistribution, dual: &DualSummary) -> Consistency {
    let qk = BigUint::from(wd.q).pow(wd.k as u32);
    Consistency {
        total_is_q_pow_k: wd.total() == qk,
        macwilliams_involution: macwilliams(&dual.distribution).is_ok_and(|back| &back.distribution == wd),
        pless: pless_verify(wd, &dual.a(1), &dual.a(2), &dual.a(3)),
    }
}

fn compare_prediction(run: &mut Run, report: &VerificationReport, pr: &Prediction, dual: Option<&DualSummary>) {
    let source = format!("closed-form prediction ({})", pr.case);
    let c = &report.computed;
    run.expect("n", &pr.n, &c.n, &source);
    run.expect("k", &pr.k, &c.k, &source);
    if let Some(b) = pr.self_orthogonal {
        run.expect("self_orthogonal", &b, &report.self_orthogonal, &source);
    }
    if let Some(b) = pr.contains_all_ones {
        run.expect("contains_all_ones", &b, &report.contains_all_ones, &source);
    }
    let Some(wd) = &report.weight_distribution else {
        return;
    };
    if pr.d.is_some() {
        run.expect("d", &show_opt(pr.d), &show_opt(c.d), &source);
    }
    if let Some(expected) = &pr.distribution {
        if expected.counts != wd.counts {
            let diff: Vec<String> = expected
                .counts
                .keys()
                .chain(wd.counts.keys())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .filter(|w| expected.count(**w) != wd.count(**w))
                .take(6)
                .map(|w| format!("A_{w}: {} vs {}", expected.count(*w), wd.count(*w)))
                .collect();
            run.delta("weight distribution", expected.to_string(), format!("{wd} ({})", diff.join("; ")), &source);
        }
    }
    if let Some(div) = pr.divisible_by {
        if !wd.is_divisible_by(div) {
            run.delta("divisibility", format!("{div}-divisible"), format!("divisor {}", wd.divisor()), &source);
        }
    }
    let Some(dual) = dual else { return };
    if pr.dual.d_perp.is_some() {
        run.expect("d_perp", &show_opt(pr.dual.d_perp), &show_opt(dual.d_perp), &source);
    }
    for (i, a) in &pr.dual.coefficients {
        run.expect(&format!("A_perp_{i}"), a, &dual.a(*i), &source);
    }
}

fn compare_row(run: &mut Run, row: &ParamRow, n: usize, k: usize, d: Option<usize>, what: &str, source: &str) {
    if let Some(x) = row.n {
        run.expect(&format!("{what} n"), &x, &n, source);
    }
    if let Some(x) = row.k {
        run.expect(&format!("{what} k"), &x, &k, source);
    }
    if let Some(x) = row.d {
        run.expect(&format!("{what} d"), &x.to_string(), &show_opt(d), source);
    }
}

fn compare_expectation(run: &mut Run, report: &mut VerificationReport, ex: &Expectation) {
    let src = ex.citation.as_str();
    let c = report.computed.clone();
    let d_perp = report.dual.as_ref().and_then(|d| d.d_perp);
    if let Some(b) = ex.self_orthogonal {
        run.expect("self_orthogonal", &b, &report.self_orthogonal, src);
    }
    if let Some(b) = ex.contains_all_ones {
        run.expect("contains_all_ones", &b, &report.contains_all_ones, src);
    }
    let Some(wd) = &report.weight_distribution else {
        return;
    };
    if let Some(row) = &ex.code {
        compare_row(run, row, c.n, c.k, c.d, "code", src);
    }
    if let Some(row) = &ex.dual {
        compare_row(run, row, c.n, c.n - c.k, d_perp, "dual", src);
    }
    for (w, a) in &ex.weights {
        run.expect(&format!("A_{w}"), a, &wd.count(*w), src);
    }
    if let Some(div) = ex.divisor {
        run.expect("divisor", &div, &wd.divisor(), src);
    }
    if let Some(dual) = &report.dual {
        for (i, a) in &ex.dual_coefficients {
            let computed = dual.low.get(i).cloned().unwrap_or_default();
            run.expect(&format!("A_perp_{i}"), a, &computed, src);
        }
    }
    let replays: Vec<TableReplay> = [(false, &ex.code, c.k, c.d), (true, &ex.dual, c.n - c.k, d_perp)]
        .into_iter()
        .filter_map(|(dual, row, k, d)| {
            let row = row.as_ref()?;
            let (stated, d) = (row.optimality?, d?);
            let hamming_rule = bounds_audit(c.n, k, d, c.q).sphere_packing_class;
            let verdict = if hamming_rule == stated {
                ClassificationVerdict::Confirmed
            } else {
                ClassificationVerdict::Inconclusive
            };
            Some(TableReplay { dual, n: c.n, k, d, stated, hamming_rule, verdict, citation: ex.citation.clone() })
        })
        .collect();
    for r in replays.iter().filter(|r| r.verdict == ClassificationVerdict::Inconclusive) {
        run.notes.push(format!(
            "[{},{},{}] is listed as {} but the sphere-packing rule gives {} (inconclusive, not a mismatch)",
            r.n,
            r.k,
            r.d,
            r.stated.label(),
            r.hamming_rule.label()
        ));
    }
    if let Some(b) = report.bounds.as_mut() {
        b.table = replays;
    }
}

fn check_designs(
    run: &mut Run,
    code: &LinearCode,
    wd: &WeightDistribution,
    dual: &DualSummary,
    prediction: Option<&Prediction>,
    expectation: Option<&Expectation>,
    budget: u64,
) -> Vec<crate::analysis::DesignWitness> {
    // (source, t, κ) → claimed λ with its source
    let mut claims: BTreeMap<(bool, usize, usize), Vec<(BigUint, String)>> = BTreeMap::new();
    if let Some(p) = prediction {
        for c in &p.designs {
            claims
                .entry((c.in_dual, c.t, c.kappa))
                .or_default()
                .push((c.lambda.clone(), format!("closed-form prediction ({})", p.case)));
        }
    }
    if let Some(e) = expectation {
        for c in &e.designs {
            claims.entry((c.in_dual, c.t, c.kappa)).or_default().push((c.lambda.clone(), e.citation.clone()));
        }
    }
    let mut out = Vec::new();
    for t in [1, 2] {
        let requests: Vec<(DesignSource, usize)> = claims
            .keys()
            .filter(|k| k.1 == t)
            .map(|&(in_dual, _, kappa)| (if in_dual { DesignSource::Dual } else { DesignSource::Code }, kappa))
            .collect();
        if requests.is_empty() {
            continue;
        }
        let witnesses = match run.timed("designs", || extract_designs(code, wd, dual, &requests, t, budget)) {
            Ok(w) => w,
            Err(e @ OrthoError::BudgetExceeded { .. }) => {
                run.skip(&format!("{t}-designs"), e.to_string());
                continue;
            }
            Err(e) => {
                run.delta(&format!("{t}-designs"), "extractable design".into(), e.to_string(), "design claim");
                continue;
            }
        };
        for w in witnesses {
            let in_dual = w.source == DesignSource::Dual;
            let label = format!("{}-({},{},λ) in {}", t, w.n, w.kappa, if in_dual { "dual" } else { "code" });
            for (lambda, source) in &claims[&(in_dual, t, w.kappa)] {
                let ok = w.is_design() && w.lambda.map(BigUint::from).as_ref() == Some(lambda);
                if !ok {
                    let computed = format!("λ = {:?}, blocks {} of {}", w.lambda, w.block_count, w.expected_blocks);
                    run.delta(&label, format!("λ = {lambda}"), computed, source);
                }
            }
            out.push(w);
        }
    }
    out
}

/// Locality by exhaustive search when its unavoidable work fits the budget,
/// otherwise through the minimum-weight dual supports; `Err` carries the
/// skip reason.
pub fn measure_locality(
    code: &LinearCode,
    r_max: usize,
    d_perp: Option<usize>,
    budget: u64,
) -> std::result::Result<LocalityReport, String> {
    let n = code.n();
    // every set smaller than d⊥ − 1 is independent and must be visited
    let floor: BigUint = match d_perp {
        Some(dp) => {
            (1..dp.saturating_sub(1).min(r_max + 1)).map(|s| binomial(n - 1, s)).sum::<BigUint>() * BigUint::from(n)
        }
        None => BigUint::default(),
    };
    let mut reasons = Vec::new();
    if floor > BigUint::from(budget) {
        reasons.push(format!("exhaustive search needs at least {floor} repair-set candidates, budget is {budget}"));
    } else {
        match locality(code, r_max, budget) {
            Ok(w) => {
                let verified = w.verify(code);
                let mut repair_sizes = BTreeMap::new();
                for rs in &w.repairs {
                    *repair_sizes.entry(rs.set.len()).or_insert(0) += 1;
                }
                let witness = w.repairs.iter().find(|rs| rs.set.len() == w.r).cloned();
                return Ok(LocalityReport {
                    method: LocalityMethod::Exhaustive,
                    r: Some(w.r),
                    exceeds: None,
                    repair_sizes,
                    witness,
                    verified,
                });
            }
            Err(OrthoError::LocalityExceeds { r_max, .. }) => {
                return Ok(LocalityReport {
                    method: LocalityMethod::Exhaustive,
                    r: None,
                    exceeds: Some(r_max),
                    repair_sizes: BTreeMap::new(),
                    witness: None,
                    verified: true,
                });
            }
            Err(e) => reasons.push(format!("exhaustive search: {e}")),
        }
    }
    let Some(dp) = d_perp else {
        reasons.push("dual distance unknown".into());
        return Err(reasons.join("; "));
    };
    match lemma_locality(code, dp, budget) {
        Ok(l) if l.one_design => Ok(LocalityReport {
            method: LocalityMethod::DualSupports,
            r: l.locality,
            exceeds: None,
            repair_sizes: BTreeMap::new(),
            witness: None,
            verified: true,
        }),
        Ok(l) => {
            reasons.push(format!("dual supports cover coordinates unevenly ({:?})", l.coverage));
            Err(reasons.join("; "))
        }
        Err(e) => {
            reasons.push(format!("dual-support path: {e}"));
            Err(reasons.join("; "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::report::Status;

    fn verify(text: &str) -> VerificationReport {
        verify_family(&FamilyParams::parse(text).unwrap(), &VerifyOptions::default()).unwrap()
    }

    #[test]
    fn c4_s2_passes() {
        let r = verify("family=c4 p=3 e=1 s=2");
        assert_eq!(r.status, Status::Pass, "{:?}", r.deltas);
        assert_eq!((r.computed.n, r.computed.k, r.computed.d), (21, 5, Some(12)));
        assert_eq!(r.dual.as_ref().unwrap().d_perp, Some(3));
    }

    #[test]
    fn budget_skips_are_explicit() {
        let fp = FamilyParams::parse("family=example q=3 m=3").unwrap();
        let r = verify_family(&fp, &VerifyOptions { budget: 10, ..Default::default() }).unwrap();
        assert_eq!(r.status, Status::Skipped);
        assert_eq!(r.skips[0].check, "weight enumeration");
        assert!(r.weight_distribution.is_none());
    }

    #[test]
    fn analysis_only_reports_have_no_deltas() {
        let fp = FamilyParams::parse("family=lrc1 q=3 m=5 m1=1 m2=1").unwrap();
        let r = verify_family(&fp, &VerifyOptions { compare: false, ..Default::default() }).unwrap();
        assert!(r.deltas.is_empty() && r.locality.is_none());
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn exhaustive_locality_reports_the_worst_column() {
        let code =
            crate::families::build_family(&FamilyParams::parse("family=lrc1 q=3 m=4 m1=1 m2=1").unwrap()).unwrap();
        let l = measure_locality(&code, 3, Some(2), 1 << 24).unwrap();
        assert_eq!((l.method, l.r), (LocalityMethod::Exhaustive, Some(2)));
        assert!(l.verified && l.witness.is_some());
    }
}
