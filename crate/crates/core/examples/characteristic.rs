//! Projective dimension depends on the field: the Stanley-Reisner ideal of the
//! six-vertex triangulation of the real projective plane.

use syzygy::{full_betti, resolve, Field, Monomial, MonomialIdeal, VarContext};

const FACETS: [[usize; 3]; 10] = [
    [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
    [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
];

/// Minimal non-faces: every edge is a face, so these are the ten triples that
/// are not facets.
pub fn rp2_ideal() -> syzygy::Result<MonomialIdeal> {
    let ctx = VarContext::new(6)?;
    let mut gens = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                if !FACETS.contains(&[a, b, c]) {
                    let mut e = [0u32; 6];
                    for v in [a, b, c] {
                        e[v - 1] = 1;
                    }
                    gens.push(Monomial::from_exponents(&e));
                }
            }
        }
    }
    MonomialIdeal::minimalize(&ctx, gens)
}

pub fn run_example() -> syzygy::Result<()> {
    let ideal = rp2_ideal()?;
    println!("I = {ideal}");
    for field in [Field::Rationals, Field::Prime(2), Field::Prime(3)] {
        let betti = resolve(&ideal, field)?;
        assert_eq!(betti, full_betti(&ideal, field)?);
        println!("over {field}: betti {:?}, pd = {}", betti.total_vector(), betti.pd);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().unwrap();
}
