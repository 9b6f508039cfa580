//! One wall crossing: the swap, its holes, cycles and displacements.
//!
//! cargo run --example wall_crossing -- 1 1 0 1

use charged_bipartitions::wallcross::{check_conservation, wall_cross};
use charged_bipartitions::{build_tableau, to_charged_bipartition, Bipartition, Charge, ChargedBipartition};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());

    let b = Bipartition::parse(&arg(0, "1"), &arg(1, "1"))?;
    let cb = ChargedBipartition::new(b, Charge::new(arg(2, "0").parse()?, arg(3, "1").parse()?));
    let before = build_tableau(&cb)?;
    let (trace, after) = wall_cross(&before)?;

    println!("before  {}", before.compact());
    for (top, bottom) in trace.pairs() {
        println!("  bottom {} <- top {}", before.bottom()[bottom], before.top()[top]);
    }
    println!("holes         {:?}", trace.hole_indices());
    println!("cycles        {:?}", trace.cycle_indices());
    println!("displacements {:?}", trace.displacements());
    println!("after   {}", after.compact());
    check_conservation(&before, &trace, &after).map_err(|v| format!("{v:?}"))?;

    let image = to_charged_bipartition(&after)?;
    println!("Φ{} = {}", cb, image.bipartition);
    Ok(())
}
