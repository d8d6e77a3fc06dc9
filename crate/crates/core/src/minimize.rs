//! Consecutive cancellation down to a minimal resolution, Betti tables, and
//! degree-increasing descent chains through a minimal resolution.
//!
//! Cancelling an invertible entry `u` of `f_s` between a source `a` in `F_s`
//! and a target `b` in `F_{s-1}` removes both basis elements. Every other
//! entry `(t, c)` of `f_s` becomes `f(t, c) - f(t, a) * u^{-1} * f(b, c)`;
//! the row of `a` in `f_{s+1}` and the column of `b` in `f_{s-1}` are dropped.
//!
//! The entry cancelled at each step is the smallest invertible one in the
//! order (homological degree, source index, target index), indices referring
//! to the original Taylor basis. Rescanning from the lowest degree after every
//! cancellation selects exactly this entry: degrees below `s - 1` are
//! untouched and `f_{s-1}` only loses entries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldScalar};
use crate::monomial::{Monomial, VarContext};
use crate::taylor::{Column, Entry, FreeComplex, TaylorSymbol};

/// One cancelled pair: `source` in `F_s`, `target` in `F_{s-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cancellation {
    pub s: usize,
    pub source: Vec<usize>,
    pub target: Vec<usize>,
}

/// Cancellations in the order they were performed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CancellationTrace {
    pub steps: Vec<Cancellation>,
}

impl CancellationTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// One JSON object per line: `{"s": .., "source": [..], "target": [..]}`.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for step in &self.steps {
            out.push_str(&serde_json::to_string(step).expect("plain data serializes"));
            out.push('\n');
        }
        out
    }
}

/// Mutable sparse copy of a complex.
struct Workspace {
    /// `cols[s][src]`: entries of `f_s` out of `src` (index 0 unused).
    cols: Vec<Vec<BTreeMap<usize, Entry>>>,
    /// `rows[s][tgt]`: sources in `F_s` with an entry into `tgt`.
    rows: Vec<Vec<BTreeSet<usize>>>,
    alive: Vec<Vec<bool>>,
    invertible: BTreeSet<(usize, usize, usize)>,
}

impl Workspace {
    fn new(complex: &FreeComplex) -> Self {
        let len = complex.len();
        let mut cols = vec![Vec::new(); len];
        let mut rows = vec![Vec::new(); len];
        let mut invertible = BTreeSet::new();
        for s in 1..len {
            rows[s] = vec![BTreeSet::new(); complex.rank(s - 1)];
            cols[s] = complex
                .differential(s)
                .iter()
                .enumerate()
                .map(|(src, col)| {
                    col.iter()
                        .filter(|(_, e)| !e.scalar.is_zero())
                        .map(|(tgt, e)| {
                            rows[s][*tgt].insert(src);
                            if e.is_invertible() {
                                invertible.insert((s, src, *tgt));
                            }
                            (*tgt, e.clone())
                        })
                        .collect()
                })
                .collect();
        }
        Workspace {
            cols,
            rows,
            alive: complex.modules().iter().map(|m| vec![true; m.len()]).collect(),
            invertible,
        }
    }

    fn add_to(&mut self, s: usize, src: usize, tgt: usize, scalar: FieldScalar, mono: Monomial) -> Result<()> {
        let col = &mut self.cols[s][src];
        let now = match col.get_mut(&tgt) {
            Some(existing) => {
                if existing.mono != mono {
                    return Err(Error::Invariant(format!(
                        "inhomogeneous update of f_{s} entry {src} -> {tgt}"
                    )));
                }
                existing.scalar = &existing.scalar + &scalar;
                if existing.scalar.is_zero() {
                    col.remove(&tgt);
                    self.rows[s][tgt].remove(&src);
                    None
                } else {
                    Some(existing.is_invertible())
                }
            }
            None if scalar.is_zero() => None,
            None => {
                let entry = Entry { scalar, mono };
                let inv = entry.is_invertible();
                col.insert(tgt, entry);
                self.rows[s][tgt].insert(src);
                Some(inv)
            }
        };
        if now == Some(true) {
            self.invertible.insert((s, src, tgt));
        } else {
            self.invertible.remove(&(s, src, tgt));
        }
        Ok(())
    }

    fn cancel(&mut self, s: usize, a: usize, b: usize) -> Result<()> {
        let pivot = self.cols[s][a][&b].clone();
        let pivot_inv = pivot
            .scalar
            .inv()
            .ok_or_else(|| Error::Invariant("zero pivot".into()))?;
        let col_a: Vec<(usize, Entry)> = self.cols[s][a]
            .iter()
            .filter(|(t, _)| **t != b)
            .map(|(t, e)| (*t, e.clone()))
            .collect();
        let row_b: Vec<usize> = self.rows[s][b].iter().copied().filter(|&c| c != a).collect();

        for c in row_b {
            let v = self.cols[s][c][&b].clone();
            let factor = -&(&v.scalar * &pivot_inv);
            for (t, w) in &col_a {
                let mono = v
                    .mono
                    .checked_mul(&w.mono)?
                    .exact_div(&pivot.mono)
                    .ok_or_else(|| {
                        Error::Invariant(format!("non-exact monomial division cancelling f_{s} {a} -> {b}"))
                    })?;
                self.add_to(s, c, *t, &factor * &w.scalar, mono)?;
            }
        }

        // Drop column a and row b of f_s.
        for t in std::mem::take(&mut self.cols[s][a]).into_keys() {
            self.rows[s][t].remove(&a);
            self.invertible.remove(&(s, a, t));
        }
        for c in std::mem::take(&mut self.rows[s][b]) {
            self.cols[s][c].remove(&b);
            self.invertible.remove(&(s, c, b));
        }
        // Row a of f_{s+1}.
        if s + 1 < self.cols.len() {
            for c in std::mem::take(&mut self.rows[s + 1][a]) {
                self.cols[s + 1][c].remove(&a);
                self.invertible.remove(&(s + 1, c, a));
            }
        }
        // Column b of f_{s-1}.
        if s >= 2 {
            for t in std::mem::take(&mut self.cols[s - 1][b]).into_keys() {
                self.rows[s - 1][t].remove(&b);
                self.invertible.remove(&(s - 1, b, t));
            }
        }
        self.alive[s][a] = false;
        self.alive[s - 1][b] = false;
        Ok(())
    }
}

/// Prune `complex` by consecutive cancellation until no differential entry
/// is invertible. The input is left untouched.
pub fn minimize(complex: &FreeComplex) -> Result<(FreeComplex, CancellationTrace)> {
    let mut work = Workspace::new(complex);
    let mut trace = CancellationTrace::default();
    while let Some(&(s, a, b)) = work.invertible.first() {
        trace.steps.push(Cancellation {
            s,
            source: complex.module(s)[a].indices(),
            target: complex.module(s - 1)[b].indices(),
        });
        work.cancel(s, a, b)?;
    }

    // Re-index survivors.
    let len = complex.len();
    let mut remap: Vec<Vec<Option<usize>>> = Vec::with_capacity(len);
    let mut modules: Vec<Vec<TaylorSymbol>> = Vec::with_capacity(len);
    for s in 0..len {
        let mut next = 0;
        let mut map = Vec::with_capacity(complex.rank(s));
        let mut symbols = Vec::new();
        for (i, sym) in complex.module(s).iter().enumerate() {
            if work.alive[s][i] {
                map.push(Some(next));
                symbols.push(sym.clone());
                next += 1;
            } else {
                map.push(None);
            }
        }
        remap.push(map);
        modules.push(symbols);
    }
    let mut differentials: Vec<Vec<Column>> = Vec::with_capacity(len.saturating_sub(1));
    for s in 1..len {
        let mut columns = Vec::with_capacity(modules[s].len());
        for (src, col) in std::mem::take(&mut work.cols[s]).into_iter().enumerate() {
            if !work.alive[s][src] {
                continue;
            }
            let column: Column = col
                .into_iter()
                .map(|(t, e)| {
                    let t = remap[s - 1][t].ok_or_else(|| {
                        Error::Invariant(format!("f_{s} entry points at a cancelled symbol"))
                    })?;
                    Ok((t, e))
                })
                .collect::<Result<_>>()?;
            columns.push(column);
        }
        differentials.push(columns);
    }
    let minimal = FreeComplex::from_parts(complex.field(), complex.ctx().clone(), modules, differentials);
    Ok((minimal, trace))
}

/// Total, graded and multigraded Betti numbers of `S/M`, with the projective
/// dimension. The graded index `j` is the total degree of the multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub field: Field,
    pub ctx: VarContext,
    pub pd: usize,
    pub total: BTreeMap<usize, usize>,
    pub graded: BTreeMap<(usize, u64), usize>,
    pub multigraded: BTreeMap<(usize, Monomial), usize>,
}

/// JSON shape of a [`BettiTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiJson {
    pub field: Field,
    pub pd: usize,
    pub total: BTreeMap<usize, usize>,
    pub graded: Vec<GradedJson>,
    pub multigraded: Vec<MultigradedJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedJson {
    pub i: usize,
    pub j: u64,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultigradedJson {
    pub i: usize,
    pub m: String,
    pub b: usize,
}

impl BettiTable {
    /// Build from multigraded counts; zero counts are dropped.
    pub fn from_multigraded(
        field: Field,
        ctx: VarContext,
        counts: impl IntoIterator<Item = ((usize, Monomial), usize)>,
    ) -> Result<Self> {
        let mut total = BTreeMap::new();
        let mut graded = BTreeMap::new();
        let mut multigraded = BTreeMap::new();
        for ((i, m), b) in counts {
            if b == 0 {
                continue;
            }
            ctx.check(&m)?;
            *total.entry(i).or_insert(0) += b;
            *graded.entry((i, m.total_degree())).or_insert(0) += b;
            *multigraded.entry((i, m)).or_insert(0) += b;
        }
        let pd = *total.keys().next_back().ok_or(Error::UnitIdeal)?;
        Ok(BettiTable {
            field,
            ctx,
            pd,
            total,
            graded,
            multigraded,
        })
    }

    /// Betti table of `S/0 = S`: a single free module in degree 0.
    pub fn ring(ctx: &VarContext, field: Field) -> Self {
        Self::from_multigraded(field, ctx.clone(), [((0, ctx.one()), 1)])
            .expect("nonempty table")
    }

    pub fn betti(&self, i: usize) -> usize {
        self.total.get(&i).copied().unwrap_or(0)
    }

    pub fn graded_betti(&self, i: usize, j: u64) -> usize {
        self.graded.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn multigraded_betti(&self, i: usize, m: &Monomial) -> usize {
        self.multigraded.get(&(i, m.clone())).copied().unwrap_or(0)
    }

    /// `i -> beta_{i,m}` for the nonzero entries at multidegree `m`.
    pub fn at(&self, m: &Monomial) -> BTreeMap<usize, usize> {
        self.multigraded
            .iter()
            .filter(|((_, l), _)| l == m)
            .map(|((i, _), b)| (*i, *b))
            .collect()
    }

    /// `(beta_0, beta_1, ..., beta_pd)`.
    pub fn total_vector(&self) -> Vec<usize> {
        (0..=self.pd).map(|i| self.betti(i)).collect()
    }

    pub fn to_json(&self) -> BettiJson {
        let mut multigraded: Vec<MultigradedJson> = self
            .multigraded
            .iter()
            .map(|((i, m), b)| MultigradedJson {
                i: *i,
                m: self.ctx.format(m),
                b: *b,
            })
            .collect();
        multigraded.sort_by(|x, y| (x.i, &x.m).cmp(&(y.i, &y.m)));
        BettiJson {
            field: self.field,
            pd: self.pd,
            total: self.total.clone(),
            graded: self
                .graded
                .iter()
                .map(|((i, j), b)| GradedJson { i: *i, j: *j, b: *b })
                .collect(),
            multigraded,
        }
    }

    /// Rebuild from JSON, reparsing monomials against `ctx`. The graded and
    /// total parts must agree with the multigraded part.
    pub fn from_json(json: &BettiJson, ctx: &VarContext) -> Result<Self> {
        let counts = json
            .multigraded
            .iter()
            .map(|e| Ok(((e.i, ctx.parse(&e.m)?), e.b)))
            .collect::<Result<Vec<_>>>()?;
        let table = Self::from_multigraded(json.field, ctx.clone(), counts)?;
        if table.to_json() != *json {
            return Err(Error::Invariant("inconsistent Betti table JSON".into()));
        }
        Ok(table)
    }

    /// Conventional Betti diagram: column `i`, row `j - i`.
    pub fn to_table_string(&self) -> String {
        let max_row = self.graded.keys().map(|(i, j)| j - *i as u64).max().unwrap_or(0);
        let min_row = self.graded.keys().map(|(i, j)| j - *i as u64).min().unwrap_or(0);
        let cells: Vec<String> = (0..=self.pd).map(|i| self.betti(i).to_string()).collect();
        let width = cells
            .iter()
            .map(String::len)
            .chain((0..=self.pd).map(|i| i.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = max_row.to_string().len().max(5) + 1;
        let mut out = String::new();
        let _ = write!(out, "{:>label$}", "");
        for i in 0..=self.pd {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for c in &cells {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
        for r in min_row..=max_row {
            let _ = write!(out, "{:>label$}", format!("{r}:"));
            for i in 0..=self.pd {
                let b = self.graded_betti(i, r + i as u64);
                let cell = if b == 0 { ".".to_string() } else { b.to_string() };
                let _ = write!(out, " {cell:>width$}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "field = {}", self.field);
        let _ = write!(out, "pd = {}", self.pd);
        out
    }
}

/// Count basis symbols of a minimal complex by homological degree and
/// multidegree.
pub fn betti_from_complex(complex: &FreeComplex) -> Result<BettiTable> {
    if let Some((s, _, _)) = complex.first_invertible() {
        return Err(Error::NotMinimal { s });
    }
    BettiTable::from_multigraded(
        complex.field(),
        complex.ctx().clone(),
        complex
            .modules()
            .iter()
            .enumerate()
            .flat_map(|(i, m)| m.iter().map(move |sym| ((i, sym.mdeg.clone()), 1))),
    )
}

/// Walk down a minimal complex from `start`: at each step follow the nonzero
/// entry whose target has the lexicographically smallest subset label. The
/// returned symbols run from `start` down to homological degree 1; their
/// multidegrees strictly decrease in total degree along the way.
pub fn descent_chain(complex: &FreeComplex, start: &TaylorSymbol) -> Result<Vec<TaylorSymbol>> {
    if let Some((s, _, _)) = complex.first_invertible() {
        return Err(Error::NotMinimal { s });
    }
    let s0 = start.hdeg();
    let mut idx = complex
        .module(s0)
        .iter()
        .position(|sym| sym == start)
        .ok_or_else(|| Error::Invariant("start symbol is not a basis element".into()))?;
    let mut chain = vec![start.clone()];
    for s in (2..=s0).rev() {
        let targets = complex.module(s - 1);
        idx = complex
            .column(s, idx)
            .iter()
            .map(|(t, _)| *t)
            .min_by(|a, b| targets[*a].subset.cmp(&targets[*b].subset))
            .ok_or_else(|| {
                Error::Invariant(format!(
                    "symbol {:?} in F_{s} of a minimal complex has zero differential",
                    complex.module(s)[idx].indices()
                ))
            })?;
        chain.push(targets[idx].clone());
    }
    Ok(chain)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::taylor::{taylor, taylor_from_gens, DEFAULT_GENERATOR_CAP};

    fn xyz() -> VarContext {
        VarContext::with_names(["x", "y", "z"]).unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_strs(&xyz(), gens.iter().copied()).unwrap()
    }

    fn mono(text: &str) -> Monomial {
        xyz().parse(text).unwrap()
    }

    fn minimal(gens: &[&str]) -> (FreeComplex, CancellationTrace) {
        let c = taylor(&ideal(gens), Field::Rationals).unwrap();
        let (m, trace) = minimize(&c).unwrap();
        m.check().unwrap();
        assert!(m.is_minimal());
        (m, trace)
    }

    #[test]
    fn cancels_a_single_pair() {
        // Non-minimal generating list (x, xy): the Taylor complex has the unit
        // entry [x, xy] -> [xy].
        let ctx = xyz();
        let gens = [mono("x"), mono("x*y")];
        let c = taylor_from_gens(&ctx, &gens, Field::Rationals, DEFAULT_GENERATOR_CAP).unwrap();
        let (m, trace) = minimize(&c).unwrap();
        m.check().unwrap();
        assert_eq!(m.ranks(), vec![1, 1]);
        assert_eq!(
            trace.steps,
            vec![Cancellation {
                s: 2,
                source: vec![0, 1],
                target: vec![1],
            }]
        );
        assert_eq!(
            m.column(1, 0),
            &[(0, Entry { scalar: Field::Rationals.one(), mono: mono("x") })]
        );
        assert_eq!(m.module(1)[0].indices(), vec![0]);
        assert_eq!(trace.to_json_lines(), "{\"s\":2,\"source\":[0,1],\"target\":[1]}\n");
        assert_eq!(betti_from_complex(&m).unwrap().total_vector(), vec![1, 1]);
        // The input is untouched.
        assert_eq!(c.ranks(), vec![1, 2, 1]);
    }

    #[test]
    fn already_minimal_complexes_are_unchanged() {
        for gens in [&["x", "y"][..], &["x^2*y"][..]] {
            let c = taylor(&ideal(gens), Field::Rationals).unwrap();
            let (m, trace) = minimize(&c).unwrap();
            assert!(trace.is_empty());
            assert_eq!(m, c);
        }
    }

    #[test]
    fn betti_examples() {
        let (m, _) = minimal(&["x", "y"]);
        let b = betti_from_complex(&m).unwrap();
        assert_eq!(b.total_vector(), vec![1, 2, 1]);
        assert_eq!(b.multigraded_betti(2, &mono("x*y")), 1);
        assert_eq!(b.pd, 2);

        let (m, trace) = minimal(&["x^2", "x*y", "y^2"]);
        let b = betti_from_complex(&m).unwrap();
        assert_eq!(b.total_vector(), vec![1, 3, 2]);
        assert_eq!(b.pd, 2);
        assert_eq!(trace.len(), 1);

        let (m, _) = minimal(&["x*y*z^2"]);
        let b = betti_from_complex(&m).unwrap();
        assert_eq!(b.total_vector(), vec![1, 1]);
        assert_eq!(b.pd, 1);
    }

    #[test]
    fn betti_requires_minimal_input() {
        let gens = [mono("x"), mono("x*y")];
        let c = taylor_from_gens(&xyz(), &gens, Field::Rationals, DEFAULT_GENERATOR_CAP).unwrap();
        assert_eq!(betti_from_complex(&c), Err(Error::NotMinimal { s: 2 }));
        assert!(matches!(descent_chain(&c, &c.module(2)[0]), Err(Error::NotMinimal { .. })));
    }

    #[test]
    fn descent_chain_examples() {
        let (m, _) = minimal(&["x*y", "y*z", "x*z"]);
        assert_eq!(m.ranks(), vec![1, 3, 2]);
        for start in m.module(2) {
            let chain = descent_chain(&m, start).unwrap();
            let degrees: Vec<u64> = chain.iter().map(TaylorSymbol::degree).collect();
            assert_eq!(degrees, vec![3, 2]);
        }
        let (m, _) = minimal(&["x", "y"]);
        let chain = descent_chain(&m, &m.module(2)[0]).unwrap();
        assert_eq!(chain.iter().map(TaylorSymbol::degree).collect::<Vec<_>>(), vec![2, 1]);
        let (m, _) = minimal(&["x*y"]);
        assert_eq!(descent_chain(&m, &m.module(1)[0]).unwrap().len(), 1);
    }

    #[test]
    fn descent_chain_tie_break() {
        // f_2[x, y] hits [x] and [y]; the chain picks the smaller label [0].
        let (m, _) = minimal(&["x", "y"]);
        let chain = descent_chain(&m, &m.module(2)[0]).unwrap();
        assert_eq!(chain[1].indices(), vec![0]);
    }

    #[test]
    fn json_round_trip_and_table() {
        let (m, _) = minimal(&["x^2", "x*y", "y^2"]);
        let b = betti_from_complex(&m).unwrap();
        let json = serde_json::to_string(&b.to_json()).unwrap();
        assert_eq!(
            json,
            r#"{"field":"q","pd":2,"total":{"0":1,"1":3,"2":2},"graded":[{"i":0,"j":0,"b":1},{"i":1,"j":2,"b":3},{"i":2,"j":3,"b":2}],"multigraded":[{"i":0,"m":"1","b":1},{"i":1,"m":"x*y","b":1},{"i":1,"m":"x^2","b":1},{"i":1,"m":"y^2","b":1},{"i":2,"m":"x*y^2","b":1},{"i":2,"m":"x^2*y","b":1}]}"#
        );
        let back: BettiJson = serde_json::from_str(&json).unwrap();
        assert_eq!(BettiTable::from_json(&back, &xyz()).unwrap(), b);
        assert_eq!(
            b.to_table_string(),
            "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\nfield = q\npd = 2"
        );
    }

    #[test]
    fn ring_table() {
        let t = BettiTable::ring(&xyz(), Field::Prime(2));
        assert_eq!(t.pd, 0);
        assert_eq!(t.total_vector(), vec![1]);
    }
}
