//! Evaluate statements A–G along the padded chain of Θ_{e,(0,e/2)}.
//!
//! cargo run --example proof_audit -- 3,1 3,1 4

use charged_bipartitions::proofstate::base_conditions;
use charged_bipartitions::{Bipartition, Charge, ChargedBipartition, ProofChain};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());

    let b = Bipartition::parse(&arg(0, "3,1"), &arg(1, "3,1"))?;
    let e: i64 = arg(2, "4").parse()?;
    let s = Charge::new(0, e / 2);

    println!("base conditions: {}", base_conditions(&ChargedBipartition::new(b.clone(), s), e)?);
    let chain = ProofChain::build(&b, e, s)?;
    let show = |v: Option<bool>| v.map_or("-".to_string(), |h| h.to_string());
    println!("k  A     B     C     D     E     F     G");
    for k in 0..chain.steps.len() {
        let st = chain.statements(k)?;
        println!(
            "{k:<2} {:<5} {:<5} {:<5} {:<5} {:<5} {:<5} {:<5}",
            st.a,
            st.b,
            st.c,
            st.d,
            st.e,
            show(st.f),
            show(st.g)
        );
        for broken in st.implication_violations() {
            println!("   implication violated: {broken}");
        }
    }
    println!("Θ = {}", chain.final_bipartition()?);
    Ok(())
}
