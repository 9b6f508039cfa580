//! Encode a charged bipartition as a two-row tableau and decode it back.
//!
//! cargo run --example tableau_roundtrip -- 2,1 1 -1 2

use charged_bipartitions::{build_tableau, to_charged_bipartition, Bipartition, Charge, ChargedBipartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());

    let b = Bipartition::parse(&arg(0, "2,1"), &arg(1, "1"))?;
    let charge = Charge::new(arg(2, "-1").parse()?, arg(3, "2").parse()?);
    let cb = ChargedBipartition::new(b, charge);

    let t = build_tableau(&cb)?;
    println!("{cb}");
    println!("{}", t.compact());
    println!("{t}");

    let back = to_charged_bipartition(&t)?;
    assert_eq!(back, cb);
    println!("decodes back to {back}");
    Ok(())
}
