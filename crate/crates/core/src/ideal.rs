//! Monomial ideals, stored by their minimal generating sets.
//!
//! Besides minimalization this module provides the three ideal-level
//! reductions used to bound projective dimension: restriction to the
//! generators dividing a monomial, the twin ideal (keep only exponents that
//! reach the per-variable maximum), and compression of a twin ideal into a
//! squarefree ideal by substituting `y_j = x_j^{alpha_j}`.

use std::fmt;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{parse_monomial_at, Monomial, VarContext};

/// A nonzero monomial ideal given by its minimal generators, in canonical
/// order (see [`Monomial::cmp_canonical`]).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ctx: VarContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generators of the ideal generated by `gens`.
    pub fn minimalize(ctx: &VarContext, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::EmptyIdeal);
        }
        for g in &gens {
            ctx.check(g)?;
        }
        gens.sort_by_key(Monomial::total_degree);
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|h| h.divides_unchecked(&g)) {
                minimal.push(g);
            }
        }
        minimal.sort_by(Monomial::cmp_canonical);
        Ok(MonomialIdeal {
            ctx: ctx.clone(),
            gens: minimal,
        })
    }

    /// Parse generators written in the monomial grammar.
    pub fn from_strs<'a>(ctx: &VarContext, gens: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let gens = gens
            .into_iter()
            .map(|g| ctx.parse(g))
            .collect::<Result<Vec<_>>>()?;
        Self::minimalize(ctx, gens)
    }

    pub fn ctx(&self) -> &VarContext {
        &self.ctx
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Number of minimal generators.
    pub fn q(&self) -> usize {
        self.gens.len()
    }

    /// The ideal `(1) = S`.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Least common multiple of all generators.
    pub fn lcm(&self) -> Monomial {
        self.gens
            .iter()
            .fold(self.ctx.one(), |acc, g| acc.join(g))
    }

    pub fn min_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::total_degree).min().unwrap_or(0)
    }

    /// The ideal generated by the minimal generators dividing `m`.
    pub fn restrict(&self, m: &Monomial) -> Result<Restriction> {
        self.ctx.check(m)?;
        let gens: Vec<Monomial> = self
            .gens
            .iter()
            .filter(|g| g.divides_unchecked(m))
            .cloned()
            .collect();
        if gens.is_empty() {
            return Ok(Restriction::Zero(self.ctx.clone()));
        }
        // A subset of a minimal generating set is still minimal and ordered.
        Ok(Restriction::Ideal(MonomialIdeal {
            ctx: self.ctx.clone(),
            gens,
        }))
    }

    /// The twin ideal: each generator keeps the exponent of `x_j` only where
    /// it equals the maximum `alpha_j` over all generators. The result is
    /// minimalized, so coinciding or divisible generators collapse.
    pub fn twin(&self) -> MonomialIdeal {
        let alpha = self.lcm();
        let gens = self.gens.iter().map(|g| {
            let exps: Vec<u32> = g
                .exponents()
                .iter()
                .zip(alpha.exponents())
                .map(|(&e, &a)| if e == a { a } else { 0 })
                .collect();
            Monomial::from_exponents(&exps)
        });
        Self::minimalize(&self.ctx, gens).expect("twin of a nonempty ideal is nonempty")
    }

    /// Rewrite a twin ideal as a squarefree ideal in the variables
    /// `y_j = x_j^{alpha_j}` for the variables that occur.
    pub fn compress(&self) -> Result<(MonomialIdeal, CompressionMap)> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let alpha = self.lcm();
        for g in &self.gens {
            for (var, (&e, &a)) in g.exponents().iter().zip(alpha.exponents()).enumerate() {
                if e != 0 && e != a {
                    return Err(Error::NotTwin {
                        generator: self.ctx.format(g),
                        var: self.ctx.name(var).to_string(),
                        exponent: e,
                        alpha: a,
                    });
                }
            }
        }
        let map = CompressionMap {
            alpha: alpha.exponents().to_vec(),
            used_vars: alpha.support(),
        };
        let ctx = VarContext::with_names(map.used_vars.iter().map(|&j| format!("y{}", j + 1)))?;
        let gens = self
            .gens
            .iter()
            .map(|g| map.compress_monomial(g))
            .collect::<Option<Vec<_>>>()
            .expect("exponents checked above");
        let compressed = Self::minimalize(&ctx, gens)?;
        debug_assert_eq!(compressed.q(), self.q());
        Ok((compressed, map))
    }

    /// Generators joined by `", "`.
    pub fn display(&self) -> String {
        self.gens
            .iter()
            .map(|g| self.ctx.format(g))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display())
    }
}

/// Result of [`MonomialIdeal::restrict`]. `Zero` means no generator divides
/// the monomial; the quotient is the ring itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Restriction {
    Ideal(MonomialIdeal),
    Zero(VarContext),
}

impl Restriction {
    pub fn ideal(&self) -> Option<&MonomialIdeal> {
        match self {
            Restriction::Ideal(ideal) => Some(ideal),
            Restriction::Zero(_) => None,
        }
    }

    pub fn into_ideal(self) -> Option<MonomialIdeal> {
        match self {
            Restriction::Ideal(ideal) => Some(ideal),
            Restriction::Zero(_) => None,
        }
    }
}

/// The substitution `y_j = x_j^{alpha_j}` relating a twin ideal to its
/// squarefree compression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressionMap {
    /// Exponents of the top lcm in the original variables (0 where unused).
    pub alpha: Vec<u32>,
    /// Original variable indices with `alpha_j > 0`, in order; compressed
    /// variable `k` stands for `used_vars[k]`.
    pub used_vars: Vec<usize>,
}

impl CompressionMap {
    /// `delta_j = 1` iff the exponent of `x_j` is `alpha_j`. `None` if `m`
    /// has an exponent other than 0 or `alpha_j`.
    pub fn compress_monomial(&self, m: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.used_vars.len());
        for &j in &self.used_vars {
            match m.exponent(j) {
                0 => exps.push(0),
                e if e == self.alpha[j] => exps.push(1),
                _ => return None,
            }
        }
        if (0..m.n()).any(|j| self.alpha[j] == 0 && m.exponent(j) != 0) {
            return None;
        }
        Some(Monomial::from_exponents(&exps))
    }

    /// Substitute `y_k -> x_{used_vars[k]}^{alpha}` (exponents multiply).
    pub fn expand(&self, m: &Monomial) -> Result<Monomial> {
        if m.n() != self.used_vars.len() {
            return Err(Error::ContextMismatch {
                expected: self.used_vars.len(),
                found: m.n(),
            });
        }
        let mut exps = vec![0u32; self.alpha.len()];
        for (k, &j) in self.used_vars.iter().enumerate() {
            exps[j] = m
                .exponent(k)
                .checked_mul(self.alpha[j])
                .ok_or(Error::ExponentOverflow { var: j })?;
        }
        Ok(Monomial::from_exponents(&exps))
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(u128::from(n - i)) / u128::from(i + 1);
    }
    acc
}

/// Number of monomials of total degree `d` in `n` variables (squarefree or not).
fn monomials_of_degree(n: usize, d: u32, squarefree: bool) -> u128 {
    let n = n as u64;
    let d = u64::from(d);
    if squarefree {
        binomial(n, d)
    } else {
        binomial(d + n - 1, n - 1)
    }
}

/// Number of monomials in `n` variables with total degree in `[min_deg, max_deg]`.
pub(crate) fn candidate_pool(n: usize, min_deg: u32, max_deg: u32, squarefree: bool) -> u128 {
    (min_deg..=max_deg)
        .map(|d| monomials_of_degree(n, d, squarefree))
        .fold(0u128, |a, w| a.saturating_add(w))
}

/// A seeded random ideal: `q` distinct monomials drawn uniformly from all
/// monomials whose total degree lies in `[min_deg, max_deg]`, then
/// minimalized (so the result may have fewer than `q` generators).
pub fn random_ideal(
    ctx: &VarContext,
    q: usize,
    min_deg: u32,
    max_deg: u32,
    squarefree: bool,
    seed: u64,
) -> Result<MonomialIdeal> {
    let n = ctx.n();
    if q == 0 {
        return Err(Error::Infeasible("q must be at least 1".into()));
    }
    if min_deg == 0 || min_deg > max_deg {
        return Err(Error::Infeasible(format!(
            "degree window [{min_deg}, {max_deg}] must satisfy 1 <= min_deg <= max_deg"
        )));
    }
    if squarefree && max_deg as usize > n {
        return Err(Error::Infeasible(format!(
            "squarefree monomials in {n} variables have degree at most {n}, requested up to {max_deg}"
        )));
    }
    let weights: Vec<u128> = (min_deg..=max_deg)
        .map(|d| monomials_of_degree(n, d, squarefree))
        .collect();
    let pool = candidate_pool(n, min_deg, max_deg, squarefree);
    if (q as u128) > pool {
        return Err(Error::Infeasible(format!(
            "only {pool} candidate monomials for {q} requested generators"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<Monomial> = Vec::with_capacity(q);
    while picked.len() < q {
        let mut ticket = rng.random_range(0..pool);
        let mut degree = min_deg;
        for &w in &weights {
            if ticket < w {
                break;
            }
            ticket -= w;
            degree += 1;
        }
        let m = if squarefree {
            let mut exps = vec![0u32; n];
            for j in index::sample(&mut rng, n, degree as usize) {
                exps[j] = 1;
            }
            Monomial::from_exponents(&exps)
        } else {
            random_composition(&mut rng, n, degree)
        };
        if !picked.contains(&m) {
            picked.push(m);
        }
    }
    MonomialIdeal::minimalize(ctx, picked)
}

/// Uniform exponent vector of total degree `d` (stars and bars).
fn random_composition(rng: &mut impl Rng, n: usize, d: u32) -> Monomial {
    let slots = d as usize + n - 1;
    let mut bars: Vec<usize> = index::sample(rng, slots, n - 1).into_vec();
    bars.sort_unstable();
    let mut exps = Vec::with_capacity(n);
    let mut prev = 0usize;
    for (k, &b) in bars.iter().enumerate() {
        // Stars between consecutive bars; bar k sits at slot b.
        exps.push((b - prev - if k == 0 { 0 } else { 1 }) as u32);
        prev = b;
    }
    let last = if n == 1 { slots } else { slots - prev - 1 };
    exps.push(last as u32);
    Monomial::from_exponents(&exps)
}

/// Parse the line-oriented ideal file format:
///
/// ```text
/// # comment
/// ring x y z        (or: ring 3)
/// gen x^2*y^2*z
/// gen x^2*z^2
/// ```
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut ctx: Option<VarContext> = None;
    let mut gens = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let indent = raw.len() - raw.trim_start().len();
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest_col = indent + keyword.len() + 1 + (rest.len() - rest.trim_start().len()) + 1;
        let rest = rest.trim();
        match (keyword, &ctx) {
            ("ring", None) => {
                let tokens: Vec<&str> = rest.split_whitespace().collect();
                let parsed = match tokens.as_slice() {
                    [] => return Err(Error::parse(line_no, rest_col, "`ring` needs a count or names")),
                    [count] if count.bytes().all(|b| b.is_ascii_digit()) => {
                        let n: usize = count.parse().map_err(|_| {
                            Error::parse(line_no, rest_col, format!("bad variable count `{count}`"))
                        })?;
                        VarContext::new(n)
                    }
                    names => VarContext::with_names(names.iter().copied()),
                };
                ctx = Some(parsed.map_err(|e| Error::parse(line_no, rest_col, e.to_string()))?);
            }
            ("ring", Some(_)) => {
                return Err(Error::parse(line_no, indent + 1, "duplicate `ring` line"));
            }
            ("gen", Some(ctx)) => {
                if rest.is_empty() {
                    return Err(Error::parse(line_no, rest_col, "`gen` needs a monomial"));
                }
                gens.push(parse_monomial_at(rest, ctx, line_no, rest_col)?);
            }
            ("gen", None) => {
                return Err(Error::parse(line_no, indent + 1, "`gen` before the `ring` line"));
            }
            (other, _) => {
                return Err(Error::parse(
                    line_no,
                    indent + 1,
                    format!("expected `ring` or `gen`, found `{other}`"),
                ));
            }
        }
    }
    let ctx = ctx.ok_or_else(|| Error::parse(last_line.max(1), 1, "missing `ring` line"))?;
    if gens.is_empty() {
        return Err(Error::parse(last_line.max(1), 1, "no `gen` lines"));
    }
    MonomialIdeal::minimalize(&ctx, gens)
}

/// Inverse of [`parse_ideal`]. Default names are written as a count.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let ctx = ideal.ctx();
    let mut out = if ctx.has_default_names() {
        format!("ring {}\n", ctx.n())
    } else {
        format!("ring {}\n", ctx.names().join(" "))
    };
    for g in ideal.gens() {
        out.push_str("gen ");
        out.push_str(&ctx.format(g));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn xyz() -> VarContext {
        VarContext::with_names(["x", "y", "z"]).unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_strs(&xyz(), gens.iter().copied()).unwrap()
    }

    fn worked() -> MonomialIdeal {
        ideal(&["x^2*y^2*z", "x^2*z^2", "y*z^2"])
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(&["x^2*y^2", "x^2*z^2", "z^2"]), ideal(&["x^2*y^2", "z^2"]));
        assert_eq!(ideal(&["x^2*y^2", "x^2*z^2", "z^2"]).display(), "x^2*y^2, z^2");
        assert_eq!(ideal(&["x", "x", "x^2"]).display(), "x");
        let tri = ideal(&["x*y", "y*z", "x*z"]);
        assert_eq!(tri.q(), 3);
        assert_eq!(tri.display(), "x*y, x*z, y*z");
        assert_eq!(MonomialIdeal::minimalize(&xyz(), vec![]), Err(Error::EmptyIdeal));
    }

    #[test]
    fn unit_ideal_is_flagged() {
        let unit = ideal(&["x", "1"]);
        assert!(unit.is_unit());
        assert_eq!(unit.display(), "1");
        assert!(!worked().is_unit());
    }

    #[test]
    fn restrict_examples() {
        let tri = ideal(&["x*y", "y*z", "x*z"]);
        let ctx = xyz();
        assert_eq!(tri.restrict(&ctx.parse("x*y*z").unwrap()).unwrap().ideal(), Some(&tri));
        assert_eq!(
            tri.restrict(&ctx.parse("x*y").unwrap()).unwrap().into_ideal(),
            Some(ideal(&["x*y"]))
        );
        assert_eq!(
            worked().restrict(&ctx.parse("x^2*z^2").unwrap()).unwrap().into_ideal(),
            Some(ideal(&["x^2*z^2"]))
        );
        assert_eq!(
            tri.restrict(&ctx.parse("x^5").unwrap()).unwrap(),
            Restriction::Zero(ctx)
        );
    }

    #[test]
    fn twin_examples() {
        let m = worked();
        assert_eq!(m.lcm(), xyz().parse("x^2*y^2*z^2").unwrap());
        assert_eq!(m.twin(), ideal(&["x^2*y^2", "z^2"]));
        assert_eq!(ideal(&["x^3"]).twin(), ideal(&["x^3"]));
        let sf = ideal(&["x*y", "y*z"]);
        assert_eq!(sf.twin(), sf);
    }

    #[test]
    fn compress_examples() {
        let (c, map) = ideal(&["x^2*y^2", "z^2"]).compress().unwrap();
        assert_eq!(map.alpha, vec![2, 2, 2]);
        assert_eq!(map.used_vars, vec![0, 1, 2]);
        assert_eq!(c.display(), "y1*y2, y3");

        let (c, map) = ideal(&["x^3"]).compress().unwrap();
        assert_eq!(c.display(), "y1");
        assert_eq!(c.ctx().n(), 1);
        assert_eq!(map.alpha, vec![3, 0, 0]);
        assert_eq!(map.used_vars, vec![0]);

        let (c, map) = ideal(&["x*y", "y*z"]).compress().unwrap();
        assert_eq!(c.display(), "y1*y2, y2*y3");
        assert_eq!(map.alpha, vec![1, 1, 1]);

        let err = worked().compress().unwrap_err();
        assert!(matches!(err, Error::NotTwin { ref var, exponent: 1, alpha: 2, .. } if var == "z"));
    }

    #[test]
    fn compression_map_expand() {
        let (c, map) = ideal(&["x^2*y^2", "z^3"]).compress().unwrap();
        for (g, orig) in c.gens().iter().zip(ideal(&["x^2*y^2", "z^3"]).gens()) {
            assert_eq!(&map.expand(g).unwrap(), orig);
        }
    }

    #[test]
    fn random_ideal_contracts() {
        let ctx = VarContext::new(3).unwrap();
        let a = random_ideal(&ctx, 5, 1, 3, true, 7).unwrap();
        let b = random_ideal(&ctx, 5, 1, 3, true, 7).unwrap();
        assert_eq!(a, b);
        assert!(a.q() <= 5);

        let ctx6 = VarContext::new(6).unwrap();
        for seed in 0..50 {
            let m = random_ideal(&ctx6, 6, 2, 4, true, seed).unwrap();
            assert!(m.gens().iter().all(|g| g.is_squarefree() && g.total_degree() >= 2));
            let m = random_ideal(&ctx6, 6, 2, 4, false, seed).unwrap();
            assert!(m
                .gens()
                .iter()
                .all(|g| (2..=4).contains(&g.total_degree())));
        }
        assert!(random_ideal(&ctx, 2, 4, 4, true, 0).is_err());
        assert!(random_ideal(&ctx, 8, 1, 3, true, 0).is_err());
        assert!(random_ideal(&ctx, 7, 1, 3, true, 0).is_ok());
        assert!(random_ideal(&ctx, 1, 0, 3, false, 0).is_err());
        assert!(random_ideal(&ctx, 0, 1, 3, false, 0).is_err());
    }

    #[test]
    fn squarefree_pool_enumeration() {
        // Independent count of squarefree monomials of degree 1..=3 in 3 variables.
        let pool = (1u32..8).filter(|bits| bits.count_ones() >= 1).count();
        assert_eq!(pool, 7);
        let total: u128 = (1..=3).map(|d| monomials_of_degree(3, d, true)).sum();
        assert_eq!(total, 7);
        assert_eq!(monomials_of_degree(3, 2, false), 6);
    }

    #[test]
    fn composition_is_uniform_enough() {
        // Every degree-2 monomial in 3 variables shows up.
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..500 {
            let m = random_composition(&mut rng, 3, 2);
            assert_eq!(m.total_degree(), 2);
            seen.insert(m.exponents().to_vec());
        }
        assert_eq!(seen.len(), 6);
        let m = random_composition(&mut rng, 1, 4);
        assert_eq!(m.exponents(), &[4]);
    }

    #[test]
    fn ideal_file_round_trip() {
        let text = "# Example\n\nring x y z\ngen x^2*y^2*z\ngen x^2*z^2\n  gen y*z^2\n";
        let m = parse_ideal(text).unwrap();
        assert_eq!(m, worked());
        assert_eq!(parse_ideal(&format_ideal(&m)).unwrap(), m);

        let m = parse_ideal("ring 3\ngen x1*x2\ngen x3\n").unwrap();
        assert_eq!(format_ideal(&m), "ring 3\ngen x1*x2\ngen x3\n");
    }

    #[test]
    fn ideal_file_errors() {
        let err = parse_ideal("ring 3\ngen x1*x7\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 2,
                column: 8,
                message: "unknown variable `x7`".into()
            }
        );
        assert!(matches!(parse_ideal("gen x1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ideal("ring 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("ring 2\nfoo x1\n"), Err(Error::Parse { line: 2, column: 1, .. })));
        assert!(matches!(parse_ideal("ring x x\ngen x\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ideal("ring 0\ngen 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("ring 2\nring 2\n"), Err(Error::Parse { line: 2, .. })));
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..4, 4), 1..7).prop_map(|gens| {
            let ctx = VarContext::new(4).unwrap();
            MonomialIdeal::minimalize(&ctx, gens.iter().map(|e| Monomial::from_exponents(e)))
                .unwrap()
        })
    }

    fn arb_squarefree_ideal() -> impl Strategy<Value = MonomialIdeal> {
        prop::collection::vec(prop::collection::vec(0u32..2, 4), 1..7).prop_map(|gens| {
            let ctx = VarContext::new(4).unwrap();
            MonomialIdeal::minimalize(&ctx, gens.iter().map(|e| Monomial::from_exponents(e)))
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn minimalize_idempotent(m in arb_ideal()) {
            let again = MonomialIdeal::minimalize(m.ctx(), m.gens().to_vec()).unwrap();
            prop_assert_eq!(&again, &m);
            for (i, a) in m.gens().iter().enumerate() {
                for (j, b) in m.gens().iter().enumerate() {
                    prop_assert!(i == j || !a.divides(b).unwrap());
                }
            }
        }

        #[test]
        fn restrict_to_top_lcm_is_identity(m in arb_ideal()) {
            prop_assert_eq!(m.restrict(&m.lcm()).unwrap().into_ideal(), Some(m));
        }

        #[test]
        fn twin_idempotent_and_compressible(m in arb_ideal()) {
            let t = m.twin();
            prop_assert_eq!(t.twin(), t.clone());
            prop_assume!(!t.is_unit());
            let (c, _) = t.compress().unwrap();
            prop_assert!(c.is_squarefree());
            prop_assert_eq!(c.q(), t.q());
        }

        #[test]
        fn squarefree_is_its_own_twin(m in arb_squarefree_ideal()) {
            prop_assume!(!m.is_unit());
            prop_assert_eq!(m.twin(), m.clone());
            let (c, map) = m.compress().unwrap();
            let expanded: Vec<Monomial> =
                c.gens().iter().map(|g| map.expand(g).unwrap()).collect();
            prop_assert_eq!(expanded.as_slice(), m.gens());
        }
    }
}
