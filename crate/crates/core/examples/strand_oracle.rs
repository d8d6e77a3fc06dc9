//! Betti numbers by strand homology, compared with the minimization pipeline.

use syzygy::{full_betti, resolve, strand_betti, Field, MonomialIdeal, VarContext};

pub fn run_example() -> syzygy::Result<()> {
    let ctx = VarContext::with_names(["x", "y", "z"])?;
    let triangle = MonomialIdeal::from_strs(&ctx, ["x*y", "y*z", "x*z"])?;
    let top = ctx.parse("x*y*z")?;
    println!("beta_(.,xyz) = {:?}", strand_betti(&triangle, &top, Field::Rationals)?);

    for field in [Field::Rationals, Field::Prime(32003)] {
        let ideal = MonomialIdeal::from_strs(&ctx, ["x^2", "x*y", "y^2", "y*z^3"])?;
        let oracle = full_betti(&ideal, field)?;
        let pipeline = resolve(&ideal, field)?;
        println!("over {field}: totals {:?}, agree = {}", oracle.total_vector(), oracle == pipeline);
        assert_eq!(oracle, pipeline);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
