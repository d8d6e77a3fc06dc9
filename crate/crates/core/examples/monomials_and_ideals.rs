//! Monomial grammar, ideal files, and minimal generating sets.

use syzygy::{format_ideal, parse_ideal, MonomialIdeal, VarContext};

pub fn run_example() -> syzygy::Result<()> {
    let ctx = VarContext::with_names(["x", "y", "z"])?;
    let m = ctx.parse("x^2*y*z^3")?;
    println!("{} has exponents {:?} and degree {}", ctx.format(&m), m.exponents(), m.total_degree());

    let n = ctx.parse("x*z")?;
    println!("lcm = {}, product = {}", ctx.format(&m.lcm(&n)?), ctx.format(&m.mul(&n)?));
    println!("x*z divides it: {}", n.divides(&m)?);

    // Redundant generators are dropped.
    let ideal = MonomialIdeal::from_strs(&ctx, ["x*y", "x^2*y", "y*z", "x*y*z"])?;
    println!("minimal generators: {ideal}");

    let file = "ring 3\n# a comment\ngen x1^2*x2\ngen x2*x3^4\n";
    let parsed = parse_ideal(file)?;
    print!("{}", format_ideal(&parsed));

    match parse_ideal("ring 2\ngen x1*x3\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("x3 is not declared"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
