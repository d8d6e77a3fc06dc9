//! Multigraded Betti numbers from strand homology of the Taylor complex.
//!
//! Tensoring a multigraded free resolution with the residue field kills every
//! entry with a non-unit monomial. In multidegree `m` what remains is a
//! complex of vector spaces spanned by the symbols of multidegree exactly
//! `m`, and its homology in degree `i` has dimension `beta_{i,m}`. Nothing
//! here depends on the minimization code.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::Result;
use crate::field::{Field, FieldScalar};
use crate::ideal::MonomialIdeal;
use crate::linalg::rank;
use crate::minimize::BettiTable;
use crate::monomial::Monomial;
use crate::taylor::{strand_basis, taylor, FreeComplex};

/// The degree-`m` part of `complex ⊗ k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StrandComplex {
    pub m: Monomial,
    /// `bases[i]`: indices into `F_i` of the symbols with multidegree `m`.
    pub bases: Vec<Vec<usize>>,
    /// `maps[i]` is `D_i : V_i -> V_{i-1}` as dense rows (`maps[0]` empty).
    pub maps: Vec<Vec<Vec<FieldScalar>>>,
}

impl StrandComplex {
    pub fn new(complex: &FreeComplex, m: &Monomial) -> Self {
        let bases: Vec<Vec<usize>> = (0..complex.len())
            .map(|s| strand_basis(complex, m, s))
            .collect();
        Self::from_bases(complex, m.clone(), bases)
    }

    fn from_bases(complex: &FreeComplex, m: Monomial, bases: Vec<Vec<usize>>) -> Self {
        let field = complex.field();
        let mut maps = vec![Vec::new()];
        for s in 1..bases.len() {
            let position: HashMap<usize, usize> =
                bases[s - 1].iter().enumerate().map(|(k, &t)| (t, k)).collect();
            let mut rows = vec![vec![field.zero(); bases[s].len()]; bases[s - 1].len()];
            for (col, &src) in bases[s].iter().enumerate() {
                for (tgt, entry) in complex.column(s, src) {
                    if !entry.mono.is_one() {
                        continue;
                    }
                    if let Some(&row) = position.get(tgt) {
                        rows[row][col] = entry.scalar.clone();
                    }
                }
            }
            maps.push(rows);
        }
        StrandComplex { m, bases, maps }
    }

    pub fn dim(&self, i: usize) -> usize {
        self.bases.get(i).map_or(0, Vec::len)
    }

    /// `i -> dim V_i - rank D_i - rank D_{i+1}`, nonzero values only.
    pub fn betti(&self) -> Result<BTreeMap<usize, usize>> {
        let ranks: Vec<usize> = self
            .maps
            .iter()
            .map(|d| rank(d))
            .collect::<Result<_>>()?;
        let mut out = BTreeMap::new();
        for i in 0..self.bases.len() {
            let r_in = ranks.get(i + 1).copied().unwrap_or(0);
            let r_out = if i == 0 { 0 } else { ranks[i] };
            let b = self.dim(i) - r_out - r_in;
            if b > 0 {
                out.insert(i, b);
            }
        }
        Ok(out)
    }
}

/// Group basis symbols of `complex` by multidegree, one strand per
/// multidegree, sorted by monomial.
pub fn strands(complex: &FreeComplex) -> Vec<StrandComplex> {
    let mut groups: BTreeMap<&Monomial, Vec<Vec<usize>>> = BTreeMap::new();
    for (s, module) in complex.modules().iter().enumerate() {
        for (idx, sym) in module.iter().enumerate() {
            let bases = groups
                .entry(&sym.mdeg)
                .or_insert_with(|| vec![Vec::new(); complex.len()]);
            bases[s].push(idx);
        }
    }
    groups
        .into_iter()
        .map(|(m, bases)| StrandComplex::from_bases(complex, m.clone(), bases))
        .collect()
}

/// Strand homology of any multigraded complex, over all its multidegrees.
/// Strands are evaluated in parallel and merged in multidegree order.
pub fn strand_homology(complex: &FreeComplex) -> Result<BTreeMap<(usize, Monomial), usize>> {
    let per_strand: Vec<(Monomial, BTreeMap<usize, usize>)> = strands(complex)
        .into_par_iter()
        .map(|strand| Ok((strand.m.clone(), strand.betti()?)))
        .collect::<Result<_>>()?;
    Ok(per_strand
        .into_iter()
        .flat_map(|(m, bs)| bs.into_iter().map(move |(i, b)| ((i, m.clone()), b)))
        .collect())
}

/// `beta_{i,m}(S/M)` for all `i` (nonzero values only), from the strand of
/// the full Taylor complex.
pub fn strand_betti(ideal: &MonomialIdeal, m: &Monomial, field: Field) -> Result<BTreeMap<usize, usize>> {
    ideal.ctx().check(m)?;
    let complex = taylor(ideal, field)?;
    StrandComplex::new(&complex, m).betti()
}

/// Complete Betti table of `S/M` computed strand by strand.
pub fn full_betti(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    let complex = taylor(ideal, field)?;
    let counts = strand_homology(&complex)?;
    BettiTable::from_multigraded(field, ideal.ctx().clone(), counts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::VarContext;

    fn xyz() -> VarContext {
        VarContext::with_names(["x", "y", "z"]).unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_strs(&xyz(), gens.iter().copied()).unwrap()
    }

    fn mono(text: &str) -> Monomial {
        xyz().parse(text).unwrap()
    }

    #[test]
    fn triangle_top_strand() {
        let m = ideal(&["x*y", "y*z", "x*z"]);
        let c = taylor(&m, Field::Rationals).unwrap();
        let strand = StrandComplex::new(&c, &mono("x*y*z"));
        assert_eq!(strand.dim(2), 3);
        assert_eq!(strand.dim(3), 1);
        assert_eq!(rank(&strand.maps[3]).unwrap(), 1);
        let b = strand.betti().unwrap();
        assert_eq!(b, BTreeMap::from([(2, 2)]));
        assert_eq!(strand_betti(&m, &mono("x*y*z"), Field::Prime(2)).unwrap(), b);
    }

    #[test]
    fn strand_examples() {
        let m = ideal(&["x", "y"]);
        assert_eq!(
            strand_betti(&m, &mono("x*y"), Field::Rationals).unwrap(),
            BTreeMap::from([(2, 1)])
        );
        for gens in [&["x", "y"][..], &["x^2*y", "y*z^3"][..]] {
            assert_eq!(
                strand_betti(&ideal(gens), &mono("1"), Field::Rationals).unwrap(),
                BTreeMap::from([(0, 1)])
            );
        }
        assert!(strand_betti(&m, &mono("x^2"), Field::Rationals)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn full_betti_examples() {
        let b = full_betti(&ideal(&["x", "y"]), Field::Rationals).unwrap();
        assert_eq!(b.total_vector(), vec![1, 2, 1]);
        assert_eq!(b.pd, 2);
        let b = full_betti(&ideal(&["x^2", "x*y", "y^2"]), Field::Prime(32003)).unwrap();
        assert_eq!(b.total_vector(), vec![1, 3, 2]);
        let b = full_betti(&ideal(&["x^4*z"]), Field::Rationals).unwrap();
        assert_eq!(b.total_vector(), vec![1, 1]);
        assert_eq!(b.pd, 1);
    }
}
