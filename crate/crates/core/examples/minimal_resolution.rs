//! Consecutive cancellation down to a minimal resolution and its Betti table.

use syzygy::{betti_from_complex, minimize, taylor, Field, MonomialIdeal, VarContext};

pub fn run_example() -> syzygy::Result<()> {
    let ctx = VarContext::new(4)?;
    let ideal = MonomialIdeal::from_strs(&ctx, ["x1*x2", "x2*x3", "x3*x4", "x1*x4"])?;
    let complex = taylor(&ideal, Field::Rationals)?;
    let (minimal, trace) = minimize(&complex)?;

    println!("Taylor ranks  {:?}", complex.ranks());
    println!("minimal ranks {:?} after {} cancellations", minimal.ranks(), trace.len());
    for step in trace.steps.iter().take(3) {
        println!("  cancel at s={} source {:?} target {:?}", step.s, step.source, step.target);
    }
    assert!(minimal.is_minimal());

    let betti = betti_from_complex(&minimal)?;
    println!("{}", betti.to_table_string());
    println!("{}", serde_json::to_string(&betti.to_json()).expect("table serializes"));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
