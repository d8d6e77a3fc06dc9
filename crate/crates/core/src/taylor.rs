//! The Taylor resolution of `S/M` as an explicit multigraded free complex.
//!
//! Basis symbols of `F_s` are the `s`-subsets of the minimal generators,
//! listed in lexicographic order of their index lists. The symbol for the
//! subset `i_1 < ... < i_s` has multidegree `lcm(m_{i_1}, ..., m_{i_s})`, and
//! its differential is
//!
//! ```text
//! f_s[i_1..i_s] = sum_j (-1)^(j+1) * lcm(all) / lcm(all but i_j) * [all but i_j]
//! ```
//!
//! with `j` the 1-based position inside the subset.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, VarContext};

/// Largest number of generators accepted without an explicit override.
/// Twenty generators already mean 2^20 basis symbols.
pub const DEFAULT_GENERATOR_CAP: usize = 19;

/// Hard ceiling for subset bitmasks, independent of any override.
const MAX_GENERATORS: usize = 40;

/// A basis element, labelled by the generator subset it came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TaylorSymbol {
    /// Sorted 0-based generator indices.
    pub subset: SmallVec<[u16; 8]>,
    /// `lcm` of the indexed generators; `1` for the empty subset.
    pub mdeg: Monomial,
}

impl TaylorSymbol {
    /// Homological degree: the subset size.
    pub fn hdeg(&self) -> usize {
        self.subset.len()
    }

    pub fn degree(&self) -> u64 {
        self.mdeg.total_degree()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.subset.iter().map(|&i| usize::from(i)).collect()
    }
}

/// A differential entry `scalar * mono`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub scalar: FieldScalar,
    pub mono: Monomial,
}

impl Entry {
    /// An entry is invertible when its monomial is 1 and its scalar nonzero.
    pub fn is_invertible(&self) -> bool {
        self.mono.is_one() && !self.scalar.is_zero()
    }
}

/// Column of a differential: `(target index, entry)` sorted by target.
pub type Column = Vec<(usize, Entry)>;

/// A finite complex of free modules `F_0 <- F_1 <- ... <- F_p` with
/// multigraded bases and column-sparse differentials.
#[derive(Clone, Debug, PartialEq)]
pub struct FreeComplex {
    field: Field,
    ctx: VarContext,
    modules: Vec<Vec<TaylorSymbol>>,
    /// `differentials[s - 1][source]` is the column of `f_s` for that source.
    differentials: Vec<Vec<Column>>,
}

impl FreeComplex {
    pub(crate) fn from_parts(
        field: Field,
        ctx: VarContext,
        mut modules: Vec<Vec<TaylorSymbol>>,
        mut differentials: Vec<Vec<Column>>,
    ) -> Self {
        while modules.len() > 1 && modules.last().is_some_and(Vec::is_empty) {
            modules.pop();
        }
        differentials.truncate(modules.len().saturating_sub(1));
        debug_assert!(differentials
            .iter()
            .enumerate()
            .all(|(k, d)| d.len() == modules[k + 1].len()));
        FreeComplex {
            field,
            ctx,
            modules,
            differentials,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    /// Number of stored modules, `F_0` through the last nonempty one.
    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.iter().all(Vec::is_empty)
    }

    pub fn module(&self, s: usize) -> &[TaylorSymbol] {
        self.modules.get(s).map_or(&[], Vec::as_slice)
    }

    pub fn modules(&self) -> &[Vec<TaylorSymbol>] {
        &self.modules
    }

    pub fn rank(&self, s: usize) -> usize {
        self.module(s).len()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.modules.iter().map(Vec::len).collect()
    }

    pub fn total_rank(&self) -> usize {
        self.modules.iter().map(Vec::len).sum()
    }

    /// Largest `s` with `F_s != 0`.
    pub fn top_degree(&self) -> Option<usize> {
        self.modules.iter().rposition(|m| !m.is_empty())
    }

    /// Columns of `f_s : F_s -> F_{s-1}`, one per source symbol (`s >= 1`).
    pub fn differential(&self, s: usize) -> &[Column] {
        if s == 0 {
            return &[];
        }
        self.differentials.get(s - 1).map_or(&[], Vec::as_slice)
    }

    pub fn column(&self, s: usize, source: usize) -> &[(usize, Entry)] {
        &self.differential(s)[source]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Entry)> + '_ {
        self.differentials.iter().enumerate().flat_map(|(k, d)| {
            d.iter().enumerate().flat_map(move |(src, col)| {
                col.iter().map(move |(tgt, e)| (k + 1, src, *tgt, e))
            })
        })
    }

    /// Distinct multidegrees over all basis symbols (including `[]`).
    pub fn distinct_multidegrees(&self) -> usize {
        self.modules
            .iter()
            .flatten()
            .map(|s| &s.mdeg)
            .collect::<BTreeSet<_>>()
            .len()
    }

    /// Every nonzero entry satisfies `mono * mdeg(target) = mdeg(source)`.
    pub fn check_homogeneous(&self) -> Result<()> {
        for (s, src, tgt, entry) in self.entries() {
            if entry.scalar.field() != self.field {
                return Err(Error::Invariant(format!(
                    "entry of f_{s} ({src} -> {tgt}) lives in {} instead of {}",
                    entry.scalar.field(),
                    self.field
                )));
            }
            if entry.scalar.is_zero() {
                return Err(Error::Invariant(format!("stored zero entry in f_{s}")));
            }
            let source = &self.modules[s][src].mdeg;
            let target = &self.modules[s - 1][tgt].mdeg;
            if entry.mono.checked_mul(target)? != *source {
                return Err(Error::Invariant(format!(
                    "f_{s} entry {src} -> {tgt} is not homogeneous: {} * {} != {}",
                    self.ctx.format(&entry.mono),
                    self.ctx.format(target),
                    self.ctx.format(source)
                )));
            }
        }
        Ok(())
    }

    /// `f_{s-1} . f_s = 0` for every `s`, expanded symbolically: scalars
    /// multiply, monomials multiply, and coefficients are collected per
    /// `(target, monomial)`.
    pub fn check_d_squared(&self) -> Result<()> {
        for s in 2..self.len() {
            let upper = self.differential(s);
            let lower = self.differential(s - 1);
            for (src, col) in upper.iter().enumerate() {
                let mut acc: HashMap<(usize, Monomial), FieldScalar> = HashMap::new();
                for (mid, outer) in col {
                    for (tgt, inner) in &lower[*mid] {
                        let mono = outer.mono.checked_mul(&inner.mono)?;
                        let term = &outer.scalar * &inner.scalar;
                        acc.entry((*tgt, mono))
                            .and_modify(|c| *c = &*c + &term)
                            .or_insert(term);
                    }
                }
                if let Some(((tgt, mono), c)) = acc.iter().find(|(_, c)| !c.is_zero()) {
                    return Err(Error::Invariant(format!(
                        "f_{} . f_{s} != 0: source {src} reaches target {tgt} with {c}*{}",
                        s - 1,
                        self.ctx.format(mono)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Both structural checks.
    pub fn check(&self) -> Result<()> {
        self.check_homogeneous()?;
        self.check_d_squared()
    }

    /// First invertible entry `(s, source, target)` in scan order, if any.
    pub fn first_invertible(&self) -> Option<(usize, usize, usize)> {
        self.entries()
            .find(|(_, _, _, e)| e.is_invertible())
            .map(|(s, src, tgt, _)| (s, src, tgt))
    }

    pub fn is_minimal(&self) -> bool {
        self.first_invertible().is_none()
    }
}

fn check_cap(q: usize, cap: usize) -> Result<()> {
    if q > cap || q > MAX_GENERATORS {
        return Err(Error::CapExceeded {
            q,
            cap: cap.min(MAX_GENERATORS),
        });
    }
    Ok(())
}

/// Taylor complex with the default generator cap.
pub fn taylor(ideal: &MonomialIdeal, field: Field) -> Result<FreeComplex> {
    taylor_capped(ideal, field, DEFAULT_GENERATOR_CAP)
}

/// Taylor complex of `S/M`, accepting at most `cap` generators.
pub fn taylor_capped(ideal: &MonomialIdeal, field: Field, cap: usize) -> Result<FreeComplex> {
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    taylor_from_gens(ideal.ctx(), ideal.gens(), field, cap)
}

/// Taylor complex on an arbitrary generating list, kept in the given order.
/// Non-minimal lists are allowed; their complexes carry invertible entries.
pub fn taylor_from_gens(
    ctx: &VarContext,
    gens: &[Monomial],
    field: Field,
    cap: usize,
) -> Result<FreeComplex> {
    if gens.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    for g in gens {
        ctx.check(g)?;
    }
    let q = gens.len();
    check_cap(q, cap)?;

    let empty = TaylorSymbol {
        subset: SmallVec::new(),
        mdeg: ctx.one(),
    };
    let mut modules: Vec<Vec<TaylorSymbol>> = vec![vec![empty]];
    let mut index: Vec<HashMap<u64, usize>> = vec![HashMap::from([(0u64, 0usize)])];
    let mut differentials: Vec<Vec<Column>> = Vec::with_capacity(q);

    for s in 1..=q {
        let prev = &modules[s - 1];
        let prev_index = &index[s - 1];
        let mut symbols = Vec::new();
        let mut level_index = HashMap::new();
        let mut columns = Vec::new();
        for subset in Combinations::new(q, s) {
            let mask = mask_of(&subset);
            let last = *subset.last().expect("s >= 1") as usize;
            let parent = prev_index[&(mask & !(1u64 << last))];
            let mdeg = prev[parent].mdeg.join(&gens[last]);

            let mut column: Column = Vec::with_capacity(s);
            for (pos, &i) in subset.iter().enumerate() {
                let face = prev_index[&(mask & !(1u64 << i))];
                let mono = mdeg
                    .exact_div(&prev[face].mdeg)
                    .expect("lcm of a subset divides the lcm of the full set");
                // (-1)^(j+1) with j = pos + 1.
                column.push((
                    face,
                    Entry {
                        scalar: field.sign(pos),
                        mono,
                    },
                ));
            }
            column.sort_unstable_by_key(|(t, _)| *t);

            level_index.insert(mask, symbols.len());
            symbols.push(TaylorSymbol { subset, mdeg });
            columns.push(column);
        }
        modules.push(symbols);
        index.push(level_index);
        differentials.push(columns);
    }
    Ok(FreeComplex::from_parts(field, ctx.clone(), modules, differentials))
}

fn mask_of(subset: &[u16]) -> u64 {
    subset.iter().fold(0u64, |m, &i| m | (1u64 << i))
}

/// `k`-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    current: Option<SmallVec<[u16; 8]>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            current: (k <= n).then(|| (0..k as u16).collect()),
        }
    }
}

impl Iterator for Combinations {
    type Item = SmallVec<[u16; 8]>;

    fn next(&mut self) -> Option<Self::Item> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().expect("checked above");
        let k = cur.len();
        let n = self.n as u16;
        match (0..k).rev().find(|&i| cur[i] < n - (k - i) as u16) {
            Some(i) => {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Indices of the symbols of `F_s` whose multidegree is exactly `m`.
pub fn strand_basis(complex: &FreeComplex, m: &Monomial, s: usize) -> Vec<usize> {
    complex
        .module(s)
        .iter()
        .enumerate()
        .filter(|(_, sym)| sym.mdeg == *m)
        .map(|(i, _)| i)
        .collect()
}

/// All lcms of nonempty generator subsets, with the default cap.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<BTreeSet<Monomial>> {
    lcm_lattice_capped(ideal, DEFAULT_GENERATOR_CAP)
}

pub fn lcm_lattice_capped(ideal: &MonomialIdeal, cap: usize) -> Result<BTreeSet<Monomial>> {
    check_cap(ideal.q(), cap)?;
    let mut out = BTreeSet::new();
    let gens = ideal.gens();
    // Depth-first over subsets, carrying the running lcm.
    let mut stack: Vec<(usize, Monomial)> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| (i, g.clone()))
        .collect();
    while let Some((last, lcm)) = stack.pop() {
        for (j, g) in gens.iter().enumerate().skip(last + 1) {
            stack.push((j, lcm.join(g)));
        }
        out.insert(lcm);
    }
    Ok(out)
}

/// Summary printed by `taylor --stats`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TaylorStats {
    pub q: usize,
    pub ranks: Vec<usize>,
    pub distinct_multidegrees: usize,
}

impl TaylorStats {
    pub fn of(complex: &FreeComplex, ideal: &MonomialIdeal) -> Self {
        TaylorStats {
            q: ideal.q(),
            ranks: complex.ranks(),
            distinct_multidegrees: complex.distinct_multidegrees(),
        }
    }
}
