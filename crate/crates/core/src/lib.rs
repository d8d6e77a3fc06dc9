//! Multigraded free resolutions of monomial ideals.
//!
//! The pipeline builds the Taylor resolution of `S/M`, prunes it to a minimal
//! resolution by consecutive cancellation of invertible entries, and reads off
//! Betti numbers and projective dimension. An independent strand-homology
//! oracle recomputes every multigraded Betti number straight from the Taylor
//! complex, and the [`harness`] module uses both to check projective-dimension
//! bounds and Betti-number equalities on directed and random ideals.
//!
//! ```
//! use syzygy::{Field, MonomialIdeal, VarContext};
//!
//! let ctx = VarContext::with_names(["x", "y", "z"]).unwrap();
//! let m = MonomialIdeal::from_strs(&ctx, ["x^2*y^2*z", "x^2*z^2", "y*z^2"]).unwrap();
//! assert_eq!(m.twin().display(), "x^2*y^2, z^2");
//!
//! let betti = syzygy::resolve(&m, Field::Rationals).unwrap();
//! assert_eq!(betti.pd, 2);
//! ```

pub mod cli;
mod error;
pub mod field;
pub mod harness;
pub mod ideal;
pub mod linalg;
pub mod minimize;
pub mod monomial;
pub mod oracle;
pub mod taylor;

pub use error::{Error, Result};
pub use field::{Field, FieldScalar, DEFAULT_PRIME};
pub use ideal::{format_ideal, parse_ideal, random_ideal, CompressionMap, MonomialIdeal, Restriction};
pub use minimize::{
    betti_from_complex, descent_chain, minimize, BettiTable, Cancellation, CancellationTrace,
};
pub use monomial::{format_monomial, parse_monomial, Monomial, VarContext};
pub use oracle::{full_betti, strand_betti, StrandComplex};
pub use taylor::{
    lcm_lattice, strand_basis, taylor, taylor_capped, taylor_from_gens, Entry, FreeComplex, TaylorStats,
    TaylorSymbol, DEFAULT_GENERATOR_CAP,
};

/// Betti table of `S/M` via Taylor complex and minimization.
pub fn resolve(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let complex = taylor(ideal, field)?;
    let (minimal, _) = minimize(&complex)?;
    betti_from_complex(&minimal)
}
