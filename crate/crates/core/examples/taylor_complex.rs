//! The Taylor complex: symbols, differentials, and structural checks.

use syzygy::taylor::lcm_lattice;
use syzygy::{taylor, Field, MonomialIdeal, TaylorStats, VarContext};

pub fn run_example() -> syzygy::Result<()> {
    let ctx = VarContext::with_names(["x", "y", "z"])?;
    let ideal = MonomialIdeal::from_strs(&ctx, ["x^2", "x*y", "y^2*z"])?;
    let complex = taylor(&ideal, Field::Rationals)?;

    for s in 0..complex.len() {
        for (idx, sym) in complex.module(s).iter().enumerate() {
            print!("F_{s}[{idx}] = {:?} mdeg {}", sym.indices(), ctx.format(&sym.mdeg));
            if s > 0 {
                let terms: Vec<String> = complex
                    .column(s, idx)
                    .iter()
                    .map(|(t, e)| format!("{}*{}*{:?}", e.scalar, ctx.format(&e.mono), complex.module(s - 1)[*t].indices()))
                    .collect();
                print!("   d -> {}", terms.join(" + "));
            }
            println!();
        }
    }

    complex.check()?;
    println!("homogeneous, d^2 = 0");

    let stats = TaylorStats::of(&complex, &ideal);
    println!("{}", serde_json::to_string(&stats).expect("stats serialize"));

    let lattice: Vec<String> = lcm_lattice(&ideal)?.iter().map(|m| ctx.format(m)).collect();
    println!("lcm lattice: {}", lattice.join(", "));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
