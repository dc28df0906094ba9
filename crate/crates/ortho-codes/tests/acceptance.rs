//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! The suite is the same code that `ortho verify --all-desk-scale` runs. Two
//! criteria are known to fail against the published claims, and the test
//! pins down exactly how they fail:
//!
//! * criterion 7 — the subfield LRC at `q = 3, m = 5, m1 = m2 = 1` has
//!   locality 3, not 2 (repairing the zero coordinate with two others needs a
//!   square root of −1 in GF(3^m), which exists only for even `m`);
//! * criterion 11 — the sphere-packing rule cannot reproduce most
//!   "optimal" labels of the optimal-codes table; those rows are recorded as
//!   inconclusive.
//!
//! Every other criterion must pass.
//!
//! This target runs without the libtest harness so that the criterion lines
//! always appear in the output of `cargo test`.

use std::collections::BTreeSet;

use ortho_codes::cli::acceptance::{confirmed_table_rows, run_suite, SuiteOptions};
use ortho_codes::cli::report::Status;

const KNOWN_FAILURES: [&str; 2] = ["7", "11"];

fn desk_scale_criteria() {
    let (results, reports) = run_suite(SuiteOptions::default());
    for c in &results {
        println!("{}", c.line());
        for d in &c.details {
            println!("    {d}");
        }
    }
    assert_eq!(results.len(), 11, "eleven default-tier criteria");

    let failing: BTreeSet<&str> = results.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    let known: BTreeSet<&str> = KNOWN_FAILURES.into_iter().collect();
    assert_eq!(failing, known, "failing criteria differ from the documented set");

    // The locality shortfall is the only defect of the subfield LRC.
    let lrc = reports
        .iter()
        .find(|r| r.params.to_string().contains("lrc1") && r.params.get("m") == Some(5))
        .expect("subfield LRC at m = 5 was verified");
    assert_eq!(lrc.status, Status::Mismatch);
    // One delta against the closed-form prediction, one against the
    // published row; both concern the locality alone.
    assert!(!lrc.deltas.is_empty());
    assert!(
        lrc.deltas.iter().all(|d| d.quantity == "locality" && d.expected == "2" && d.computed == "3"),
        "{:?}",
        lrc.deltas
    );
    let loc = lrc.locality.as_ref().expect("locality measured");
    assert_eq!(loc.r, Some(3));
    assert!(loc.verified);
    assert_eq!(loc.repair_sizes.get(&3), Some(&1), "only the zero coordinate needs three helpers");

    // The table replay reproduces (n, k, d) for every row; only four labels
    // are confirmed by the sphere-packing rule.
    let mut confirmed = confirmed_table_rows(&reports);
    confirmed.sort_unstable();
    confirmed.dedup();
    assert_eq!(confirmed, vec![(81, 70, 6), (81, 74, 4), (125, 118, 3), (125, 118, 4)]);

    // Apart from the LRC, every desk-scale instance verifies cleanly.
    for r in &reports {
        if r.params.to_string() != lrc.params.to_string() {
            assert_eq!(r.status, Status::Pass, "{}: {:?} {:?}", r.params, r.deltas, r.skips);
        }
    }
}

#[cfg(feature = "extended")]
fn extended_tier() {
    let (results, _) = run_suite(SuiteOptions { extended: true, ..Default::default() });
    let ext = results.iter().find(|c| c.id == "6x").expect("extended criterion ran");
    println!("{}", ext.line());
    for d in &ext.details {
        println!("    {d}");
    }
    assert!(ext.pass);
}

fn main() {
    desk_scale_criteria();
    #[cfg(feature = "extended")]
    extended_tier();
    println!("acceptance: criterion outcomes as documented");
}
