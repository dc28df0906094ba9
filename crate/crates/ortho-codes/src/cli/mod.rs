//! Command-line front end behind the `ortho` binary.
//!
//! * `build` — construct a family instance and emit its generator matrix;
//! * `verify` — run the full pipeline against predictions and the embedded
//!   expectations (or, with `--all-desk-scale`, the acceptance suite);
//! * `report` — an analysis-only report for a family instance, or re-render a
//!   saved JSON report.
//!
//! Exit codes: 0 all pass, 2 mismatch found, 3 a check was skipped over
//! budget, 1 usage or configuration error.

pub mod acceptance;
pub mod expectations;
pub mod pipeline;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::code_core::enumerate::DEFAULT_BUDGET;
use crate::error::{OrthoError, Result};
use crate::families::{build_family, FamilyId, FamilyParams};

pub use acceptance::{run_suite, CriterionResult, Suite, SuiteOptions};
pub use expectations::{Expectation, ExpectationSet};
pub use pipeline::{verify_family, verify_with, VerifyOptions};
pub use report::{Status, VerificationReport};

/// Exit code for usage and configuration errors.
pub const EXIT_USAGE: i32 = 1;

#[derive(Debug, Parser)]
#[command(name = "ortho", version, about = "Build, verify and report on self-orthogonal code families")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Construct a family instance and emit its generator matrix.
    Build {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Verify a family instance against its predictions and expectations.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Run the whole desk-scale acceptance suite instead of one instance.
        #[arg(long, conflicts_with = "family")]
        all_desk_scale: bool,
        /// With --all-desk-scale, include the extended tier.
        #[arg(long, requires = "all_desk_scale")]
        extended: bool,
    },
    /// Analysis-only report for a family instance, or re-render a saved report.
    Report {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// A JSON report written earlier by `verify` or `report`.
        #[arg(long = "in", value_name = "PATH", conflicts_with = "family")]
        input: Option<PathBuf>,
    },
}

/// Family selection: `--family` plus parameter flags, or `key=value` tokens.
#[derive(Debug, Clone, Default, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Extension degree of the alphabet (alias: --f).
    #[arg(long, alias = "f")]
    pub e: Option<u64>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub m: Option<u64>,
    #[arg(long)]
    pub k: Option<u64>,
    #[arg(long)]
    pub s: Option<u64>,
    #[arg(long)]
    pub m1: Option<u64>,
    #[arg(long)]
    pub m2: Option<u64>,
    #[arg(long)]
    pub rho: Option<u64>,
    #[arg(long)]
    pub delta: Option<u64>,
    #[arg(long)]
    pub n: Option<u64>,
    /// Function table for the bent-function family: one value in [0, p) per line.
    #[arg(long = "fn", value_name = "PATH")]
    pub function: Option<PathBuf>,
    /// Parameters in `family=<id> key=value …` form.
    #[arg(value_name = "KEY=VALUE")]
    pub pairs: Vec<String>,
}

impl FamilyArgs {
    fn is_empty(&self) -> bool {
        self.family.is_none() && self.pairs.is_empty()
    }

    /// Merge flags and `key=value` tokens into family parameters.
    pub fn to_params(&self) -> Result<FamilyParams> {
        let mut tokens: Vec<String> = self.pairs.clone();
        if let Some(f) = &self.family {
            tokens.push(format!("family={f}"));
        }
        let flags = [
            ("p", self.p),
            ("e", self.e),
            ("q", self.q),
            ("m", self.m),
            ("k", self.k),
            ("s", self.s),
            ("m1", self.m1),
            ("m2", self.m2),
            ("rho", self.rho),
            ("delta", self.delta),
            ("n", self.n),
        ];
        tokens.extend(flags.iter().filter_map(|(k, v)| v.map(|v| format!("{k}={v}"))));
        if let Some(path) = &self.function {
            tokens.push(format!("fn={}", path.display()));
        }
        if !tokens.iter().any(|t| t.starts_with("family=")) {
            return Err(OrthoError::Parse(format!(
                "missing --family (one of {})",
                FamilyId::ALL.map(|f| f.as_str()).join(", ")
            )));
        }
        FamilyParams::from_pairs(tokens.iter().map(String::as_str))
    }
}

/// Budget and parallelism.
#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Step budget per check (`67108864`, `2e8` or `2^26`); default 2^26.
    #[arg(long, env = "ORTHO_BUDGET", value_parser = parse_budget)]
    pub budget: Option<u64>,
    /// Worker threads for enumeration.
    #[arg(long)]
    pub workers: Option<usize>,
}

impl RunArgs {
    fn options(&self, compare: bool) -> VerifyOptions {
        let defaults = VerifyOptions::default();
        VerifyOptions {
            budget: self.budget.unwrap_or(DEFAULT_BUDGET),
            workers: self.workers.unwrap_or(defaults.workers).max(1),
            compare,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Tsv,
}

/// Output format and destination.
#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// Parse a budget: a plain integer, `a^b`, or an integral float such as `2e8`.
pub fn parse_budget(text: &str) -> std::result::Result<u64, String> {
    let t = text.trim().replace('_', "");
    if let Some((a, b)) = t.split_once('^') {
        let (a, b): (u64, u32) = (a.parse().map_err(|e| format!("{e}"))?, b.parse().map_err(|e| format!("{e}"))?);
        return a.checked_pow(b).ok_or_else(|| format!("{text} overflows"));
    }
    if let Ok(v) = t.parse::<u64>() {
        return Ok(v);
    }
    let f: f64 = t.parse().map_err(|_| format!("'{text}' is not a budget"))?;
    if f >= 0.0 && f.fract() == 0.0 && f < u64::MAX as f64 {
        Ok(f as u64)
    } else {
        Err(format!("'{text}' is not a non-negative integer"))
    }
}

/// Generator matrix as emitted by `build`.
#[derive(Debug, Serialize)]
struct BuiltCode {
    params: FamilyParams,
    n: usize,
    k: usize,
    q: usize,
    generator: Vec<Vec<u8>>,
}

/// Suite output of `verify --all-desk-scale`.
#[derive(Debug, Serialize)]
struct SuiteOutput<'a> {
    status: Status,
    criteria: &'a [CriterionResult],
    reports: &'a [VerificationReport],
}

fn emit(output: &OutputArgs, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| OrthoError::Parse(e.to_string()))
}

fn render(report: &VerificationReport, format: Format) -> Result<String> {
    match format {
        Format::Json => json(report),
        Format::Tsv => Ok(report.to_tsv()),
    }
}

/// Execute a parsed command; returns the exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Build { family, output } => {
            let params = family.to_params()?;
            let code = build_family(&params)?;
            let text = match output.format {
                Format::Json => json(&BuiltCode {
                    n: code.n(),
                    k: code.k(),
                    q: code.q(),
                    generator: code.basis().to_vec(),
                    params,
                })?,
                Format::Tsv => code.to_text(),
            };
            emit(&output, &text, stdout)?;
            Ok(0)
        }
        Command::Verify { all_desk_scale: true, extended, run, output, .. } => {
            let opts = SuiteOptions { workers: run.options(true).workers, extended };
            let (criteria, reports) = run_suite(opts);
            for c in &criteria {
                writeln!(stderr, "{}", c.line())?;
                for d in c.details.iter().filter(|d| d.starts_with("FAIL")) {
                    writeln!(stderr, "    {d}")?;
                }
            }
            let status = if criteria.iter().all(|c| c.pass) { Status::Pass } else { Status::Mismatch };
            let text = match output.format {
                Format::Json => json(&SuiteOutput { status, criteria: &criteria, reports: &reports })?,
                Format::Tsv => criteria
                    .iter()
                    .flat_map(|c| {
                        let head =
                            format!("criterion\t{}\t{}\t{}", c.id, if c.pass { "PASS" } else { "FAIL" }, c.title);
                        std::iter::once(head).chain(c.details.iter().map(move |d| format!("detail\t{}\t{d}", c.id)))
                    })
                    .map(|l| l + "\n")
                    .collect(),
            };
            emit(&output, &text, stdout)?;
            Ok(status.exit_code())
        }
        Command::Verify { family, run, output, .. } => {
            let report = verify_family(&family.to_params()?, &run.options(true))?;
            for s in &report.skips {
                writeln!(stderr, "skipped {}: {}", s.check, s.reason)?;
            }
            emit(&output, &render(&report, output.format)?, stdout)?;
            Ok(report.status.exit_code())
        }
        Command::Report { input: Some(path), output, .. } => {
            let report = VerificationReport::from_json(&std::fs::read_to_string(path)?)?;
            emit(&output, &render(&report, output.format)?, stdout)?;
            Ok(report.status.exit_code())
        }
        Command::Report { family, run, output, .. } => {
            if family.is_empty() {
                return Err(OrthoError::Parse("report needs --family or --in".into()));
            }
            let report = verify_family(&family.to_params()?, &run.options(false))?;
            emit(&output, &render(&report, output.format)?, stdout)?;
            Ok(report.status.exit_code())
        }
    }
}

/// Parse arguments and run, mapping every usage or configuration error to
/// exit code 1.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match run(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(std::iter::once("ortho").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn budgets_parse_in_three_spellings() {
        assert_eq!(parse_budget("2e8"), Ok(200_000_000));
        assert_eq!(parse_budget("2^26"), Ok(1 << 26));
        assert_eq!(parse_budget("1000"), Ok(1000));
        assert!(parse_budget("1.5").is_err() && parse_budget("x").is_err());
    }

    #[test]
    fn unknown_family_is_a_usage_error() {
        let (code, _, err) = run_args(&["verify", "--family", "nosuch"]);
        assert_eq!(code, 1);
        assert!(err.contains("unknown family"));
        assert_eq!(run_args(&["verify", "--family", "c4", "--p", "3"]).0, 1);
        assert_eq!(run_args(&["frobnicate"]).0, 1);
    }

    #[test]
    fn c4_verifies_and_round_trips() {
        let (code, out, _) = run_args(&["verify", "--family", "c4", "--p", "3", "--e", "1", "--s", "2"]);
        assert_eq!(code, 0);
        let report = VerificationReport::from_json(&out).unwrap();
        assert_eq!(report.to_json().unwrap() + "\n", out);
        assert_eq!(report.dual.unwrap().d_perp, Some(3));
    }

    #[test]
    fn build_emits_a_generator_matrix() {
        let (code, out, _) = run_args(&["build", "family=example", "q=3", "m=3", "--format", "tsv"]);
        assert_eq!(code, 0);
        let built = crate::code_core::LinearCode::from_text(&out).unwrap();
        assert_eq!((built.n(), built.k()), (9, 3));
    }
}
