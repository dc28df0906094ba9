//! The full verification pipeline behind `ortho verify`.
//!
//! Verifies one family instance against its closed-form prediction and the
//! published expectations, prints the TSV rendering, and round-trips the
//! JSON report.
//!
//! ```text
//! cargo run --example verify_pipeline
//! ```

use std::error::Error;

use ortho_codes::cli::{verify_family, VerificationReport, VerifyOptions};
use ortho_codes::families::FamilyParams;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let params = FamilyParams::parse("family=c4 p=3 e=1 s=2")?;
    let report = verify_family(&params, &VerifyOptions::default())?;
    print!("{}", report.to_tsv());
    println!("status {:?}, exit code {}", report.status, report.status.exit_code());

    let json = report.to_json()?;
    assert_eq!(VerificationReport::from_json(&json)?, report);
    println!("JSON report: {} bytes, round-trips losslessly", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
