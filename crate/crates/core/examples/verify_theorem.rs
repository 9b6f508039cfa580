//! Exhaustively check that Θ_{e,(0,e/2)} keeps λ²₁ on symmetric bipartitions.
//!
//! cargo run --release --example verify_theorem -- 12 4

use charged_bipartitions::{run_verification, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max_n: u32 = args.first().map_or(Ok(12), |a| a.parse())?;
    let jobs: usize = args.get(1).map_or(Ok(1), |a| a.parse())?;

    let report = run_verification(&VerifyConfig::new(max_n).with_audit(true).with_jobs(jobs))?;
    println!("{}", report.summary());
    for failure in &report.failures {
        println!("{} e={}: {:?}", failure.bipartition, failure.e, failure.problems);
    }
    if !report.all_passed() {
        std::process::exit(1);
    }
    Ok(())
}
