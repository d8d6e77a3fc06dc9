//! Restriction ideals, twin ideals, and the squarefree compression of a twin.

use syzygy::{resolve, Field, MonomialIdeal, Restriction, VarContext};

pub fn run_example() -> syzygy::Result<()> {
    let ctx = VarContext::with_names(["x", "y", "z"])?;
    let m = MonomialIdeal::from_strs(&ctx, ["x^2*y^2*z", "x^2*z^2", "y*z^2"])?;
    println!("M      = {m}");
    println!("lcm(M) = {}", ctx.format(&m.lcm()));

    for mono in ["x^2*z^2", "x^2*y^2*z^2", "x*y"] {
        let mono = ctx.parse(mono)?;
        match m.restrict(&mono)? {
            Restriction::Ideal(sub) => println!("M_{} = {sub}", ctx.format(&mono)),
            Restriction::Zero(_) => println!("M_{} = 0", ctx.format(&mono)),
        }
    }

    let twin = m.twin();
    println!("M'     = {twin}");

    let (compressed, map) = twin.compress()?;
    println!("compressed = {compressed} with alpha = {:?}", map.alpha);
    for g in compressed.gens() {
        println!("  {} -> {}", compressed.ctx().format(g), ctx.format(&map.expand(g)?));
    }

    let pd_twin = resolve(&twin, Field::Rationals)?.pd;
    let pd_compressed = resolve(&compressed, Field::Rationals)?.pd;
    println!("pd(S/M') = {pd_twin}, pd of compression = {pd_compressed}");
    assert_eq!(pd_twin, pd_compressed);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
