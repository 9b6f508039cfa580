//! Follow Θ_{e,s} crossing by crossing, then print the JSON trace.
//!
//! cargo run --example theta_trajectory -- 2,1 2,1 2

use charged_bipartitions::{theta, theta_trajectory, Bipartition, Charge};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());

    let b = Bipartition::parse(&arg(0, "2,1"), &arg(1, "2,1"))?;
    let e: i64 = arg(2, "2").parse()?;
    let s = Charge::new(0, e / 2);

    let steps = theta_trajectory(&b, e, s)?;
    for step in &steps {
        println!(
            "k={} at {}: {} -> {}  holes {:?}",
            step.k,
            step.charge,
            step.input,
            step.output,
            step.trace.hole_indices()
        );
    }
    println!("Θ = {}", theta(&b, e, s)?);
    println!("{}", serde_json::to_string_pretty(&steps)?);
    Ok(())
}
