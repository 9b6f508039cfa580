//! Certificates that simple modules are infinite-dimensional, types B and D.
//!
//! cargo run --example certify -- 2 1,1 4

use charged_bipartitions::{certify_infinite_type_b, certify_infinite_type_d, charge_to_params, Bipartition, Charge};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());

    let b = Bipartition::parse(&arg(0, "2"), &arg(1, "1,1"))?;
    let e: i64 = arg(2, "4").parse()?;
    let s = Charge::new(0, e / 2);

    let params = charge_to_params(s, e)?;
    println!("charge {s} with e={e} is (c1, c2) = ({}, {})", params.c1, params.c2);
    let cert = certify_infinite_type_b(&b, e, s)?;
    println!("type B {b}: {:?}", cert.verdict);
    println!("{}", serde_json::to_string_pretty(&cert)?);

    for sym in ["2,1", "3", "1,1,1"] {
        let d = Bipartition::parse(sym, sym)?;
        for e in [3, 4] {
            let cert = certify_infinite_type_d(&d, e)?;
            println!("type D {d}, e={e}: {:?} via {:?}", cert.verdict, cert.criterion);
        }
    }
    Ok(())
}
