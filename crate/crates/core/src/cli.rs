//! Command-line front end.
//!
//! Exit codes: 0 when everything checked out, 1 when a mathematical check
//! failed, 2 for usage and parse errors.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::classify::{certify_infinite_type_b, certify_infinite_type_d_at};
use crate::error::Error;
use crate::partitions::{enumerate_bipartitions, enumerate_symmetric_bipartitions, Bipartition, Partition};
use crate::proofstate::audited_trajectory;
use crate::tableau::{build_tableau, to_charged_bipartition, Charge, ChargedBipartition};
use crate::verify::{run_verification, VerifyConfig};
use crate::wallcross::{theta, wall_cross};

#[derive(Debug, Parser)]
#[command(name = "cbip", version, about = "Wall-crossing combinatorics of charged bipartitions")]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,

    /// Worker threads for `verify` (0 = one per core)
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct BipartitionArgs {
    /// First component λ¹, e.g. "2,1" ("" for the empty partition)
    #[arg(long, default_value = "")]
    pub l1: Partition,

    /// Second component λ²
    #[arg(long, default_value = "")]
    pub l2: Partition,
}

impl BipartitionArgs {
    fn bipartition(&self) -> Bipartition {
        Bipartition::new(self.l1.clone(), self.l2.clone())
    }
}

#[derive(Debug, Args)]
pub struct ChargeArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub s1: i64,

    #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
    pub s2: i64,
}

impl ChargeArgs {
    fn charge(&self) -> Charge {
        Charge::new(self.s1, self.s2)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the two-row tableau of a charged bipartition
    Tableau {
        #[command(flatten)]
        bipartition: BipartitionArgs,
        #[command(flatten)]
        charge: ChargeArgs,
    },
    /// Apply one wall crossing Φ at the given charge
    Wallcross {
        #[command(flatten)]
        bipartition: BipartitionArgs,
        #[command(flatten)]
        charge: ChargeArgs,
    },
    /// Apply Θ_{e,s}
    Theta {
        #[command(flatten)]
        bipartition: BipartitionArgs,
        #[arg(short, long)]
        e: i64,
        #[command(flatten)]
        charge: ChargeArgs,
        /// Emit every crossing in the JSON trace schema
        #[arg(long)]
        trace: bool,
    },
    /// Emit an infinite-dimensionality certificate
    Certify {
        #[command(flatten)]
        bipartition: BipartitionArgs,
        #[arg(short, long)]
        e: i64,
        #[command(flatten)]
        charge: ChargeArgs,
        /// Certify L_c(λ±) for type D (needs a symmetric bipartition)
        #[arg(long)]
        type_d: bool,
        /// Numerator r of c = r/e for type D
        #[arg(long, allow_hyphen_values = true, default_value_t = -1)]
        r: i64,
    },
    /// Exhaustively check λ²₁ invariance under Θ_{e,(0,e/2)}
    Verify {
        #[arg(long)]
        max_n: u32,
        /// Also audit statements A–G along every trajectory
        #[arg(long)]
        audit_statements: bool,
        /// Extend each e-grid by one value past the bound
        #[arg(long)]
        full_e: bool,
        /// Skip checks not started within this many seconds
        #[arg(long)]
        max_seconds: Option<f64>,
        /// Also write the JSON report to this file
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List bipartitions of n in canonical order
    Enumerate {
        #[arg(short, long)]
        n: u32,
        #[arg(long)]
        symmetric: bool,
    },
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: 0 }
    }

    fn error(err: &Error) -> Self {
        let code = match err {
            Error::TheoremContradiction { .. } | Error::MalformedResult(_) => 1,
            _ => 2,
        };
        Self { stdout: String::new(), stderr: format!("error: {err}\n"), code }
    }
}

fn pretty(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output serializes") + "\n"
}

/// Parses `args` (program name first) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(err) => {
            let code = if err.use_stderr() { 2 } else { 0 };
            let text = err.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match execute(cli) {
        Ok(outcome) => outcome,
        Err(err) => Outcome::error(&err),
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::Tableau { bipartition, charge } => {
            let cb = ChargedBipartition::new(bipartition.bipartition(), charge.charge());
            let t = build_tableau(&cb)?;
            if cli.json {
                return Ok(Outcome::ok(pretty(&t)));
            }
            Ok(Outcome::ok(format!("{}\n{t}\ncharge {}, depth {}\n", t.compact(), cb.charge, t.depth())))
        }
        Command::Wallcross { bipartition, charge } => {
            let cb = ChargedBipartition::new(bipartition.bipartition(), charge.charge());
            let before = build_tableau(&cb)?;
            let (trace, after) = wall_cross(&before)?;
            let image = to_charged_bipartition(&after)?.bipartition;
            if cli.json {
                let pairs: Vec<[usize; 2]> = trace.pairs().map(|(j, i)| [j + 1, i + 1]).collect();
                let one_based = |v: &[usize]| v.iter().map(|i| i + 1).collect::<Vec<_>>();
                return Ok(Outcome::ok(pretty(&json!({
                    "input": cb.bipartition,
                    "charge": cb.charge,
                    "before": before,
                    "pairs": pairs,
                    "cycles": one_based(trace.cycle_indices()),
                    "holes": one_based(trace.hole_indices()),
                    "displacements": trace.displacements(),
                    "after": after,
                    "image": image,
                }))));
            }
            Ok(Outcome::ok(format!(
                "{}\n  -> {}\nΦ{}({}) = {image}\ncycles: {}, holes: {}\n",
                before.compact(),
                after.compact(),
                cb.charge,
                cb.bipartition,
                trace.cycle_indices().len(),
                trace.hole_indices().len()
            )))
        }
        Command::Theta { bipartition, e, charge, trace } => {
            let b = bipartition.bipartition();
            let s = charge.charge();
            if *trace {
                return Ok(Outcome::ok(pretty(&audited_trajectory(&b, *e, s)?)));
            }
            let image = theta(&b, *e, s)?;
            if cli.json {
                return Ok(Outcome::ok(pretty(&json!({
                    "input": b, "e": e, "charge": s, "image": image,
                }))));
            }
            Ok(Outcome::ok(format!("{image}\n")))
        }
        Command::Certify { bipartition, e, charge, type_d, r } => {
            let b = bipartition.bipartition();
            let cert = if *type_d {
                certify_infinite_type_d_at(&b, *r, *e)?
            } else {
                certify_infinite_type_b(&b, *e, charge.charge())?
            };
            Ok(Outcome::ok(pretty(&cert)))
        }
        Command::Verify { max_n, audit_statements, full_e, max_seconds, output } => {
            if *max_n < 2 {
                return Err(Error::InvalidParameter(format!("--max-n must be at least 2, got {max_n}")));
            }
            let time_limit = match max_seconds {
                Some(secs) if secs.is_finite() && *secs >= 0.0 => Some(Duration::from_secs_f64(*secs)),
                Some(secs) => return Err(Error::InvalidParameter(format!("--max-seconds {secs} is invalid"))),
                None => None,
            };
            let config = VerifyConfig {
                max_n: *max_n,
                audit_statements: *audit_statements,
                jobs: cli.jobs,
                full_e: *full_e,
                time_limit,
            };
            let report = run_verification(&config)?;
            let json = pretty(&report);
            let mut stderr = String::new();
            if let Some(path) = output {
                if let Err(e) = std::fs::write(path, &json) {
                    stderr = format!("error: cannot write {}: {e}\n", path.display());
                }
            }
            let stdout = if cli.json { json } else { report.summary() };
            let code = if !stderr.is_empty() {
                2
            } else if report.all_passed() {
                0
            } else {
                1
            };
            Ok(Outcome { stdout, stderr, code })
        }
        Command::Enumerate { n, symmetric } => {
            let list = if *symmetric { enumerate_symmetric_bipartitions(*n) } else { enumerate_bipartitions(*n) };
            if cli.json {
                return Ok(Outcome::ok(pretty(&list)));
            }
            Ok(Outcome::ok(list.iter().map(|b| format!("{b}\n")).collect()))
        }
    }
}
