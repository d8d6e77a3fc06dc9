//! Chains of symbols of strictly increasing degree in a minimal resolution of
//! a squarefree ideal.

use syzygy::{descent_chain, minimize, taylor, Field, MonomialIdeal, VarContext};

pub fn run_example() -> syzygy::Result<()> {
    let ctx = VarContext::new(5)?;
    // Generators of degree > 1, so pd <= 5 - 1.
    let ideal = MonomialIdeal::from_strs(&ctx, ["x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"])?;
    let (minimal, _) = minimize(&taylor(&ideal, Field::Rationals)?)?;
    let p = minimal.top_degree().expect("nonzero complex");
    println!("pd = {p}");

    for start in minimal.module(p) {
        let chain = descent_chain(&minimal, start)?;
        let degrees: Vec<u64> = chain.iter().rev().map(|s| s.degree()).collect();
        let labels: Vec<String> = chain.iter().rev().map(|s| ctx.format(&s.mdeg)).collect();
        println!("{} with degrees {degrees:?}", labels.join(" < "));
        assert!(degrees.windows(2).all(|w| w[0] < w[1]));
        assert!(degrees[0] >= 2 && degrees[p - 1] <= 5);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
