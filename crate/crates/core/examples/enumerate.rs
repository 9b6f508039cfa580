//! Bipartitions of n in canonical order, and how Φ permutes them.
//!
//! cargo run --example enumerate -- 3 2

use charged_bipartitions::{enumerate_bipartitions, enumerate_symmetric_bipartitions, phi, Charge, ChargedBipartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: u32 = args.first().map_or(Ok(3), |a| a.parse())?;
    let s2: i64 = args.get(1).map_or(Ok(2), |a| a.parse())?;

    let all = enumerate_bipartitions(n);
    println!("{} bipartitions of {n}; Φ at (0, {s2}):", all.len());
    for b in &all {
        let image = phi(&ChargedBipartition::new(b.clone(), Charge::new(0, s2)))?;
        let mark = if &image == b { "  fixed" } else { "" };
        println!("  {:<14} -> {image}{mark}", b.to_string());
    }
    let symmetric = enumerate_symmetric_bipartitions(2 * n);
    println!("{} symmetric bipartitions of {}", symmetric.len(), 2 * n);
    Ok(())
}
