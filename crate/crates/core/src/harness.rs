//! Randomized and directed verification of projective-dimension bounds and
//! Betti-number equalities.
//!
//! Every check runs the full pipeline (Taylor complex, structural sanity,
//! minimization, Betti table). On a 10% sample of trials, and always for
//! single-ideal checks, the minimized table is also compared against the
//! strand oracle. Trials run in parallel and are reported in trial order; a
//! trial is replayed from its recorded seed with [`trial_seed`].

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::{candidate_pool, random_ideal, MonomialIdeal, Restriction};
use crate::minimize::{betti_from_complex, descent_chain, minimize, BettiTable};
use crate::monomial::{Monomial, VarContext};
use crate::oracle::{full_betti, StrandComplex};
use crate::taylor::{lcm_lattice, taylor, FreeComplex};

/// Which statement a report is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Theorem {
    /// Squarefree, all generators of degree > k: `pd(S/M) <= n - k`.
    #[serde(rename = "t31")]
    SquarefreeBound,
    /// `pd(S/M) <= n` for every monomial ideal.
    #[serde(rename = "t46")]
    SyzygyBound,
    /// `beta_{i,m}(S/M) = beta_{i,m}(S/M_m)` at every lcm-lattice multidegree.
    #[serde(rename = "c42")]
    Restriction,
    /// `beta_{i,m}(S/M) = beta_{i,m}(S/M')` at the top lcm `m`.
    #[serde(rename = "t45")]
    Twin,
    /// The twin ideal and its squarefree compression have matching Betti tables.
    #[serde(rename = "compress")]
    Compression,
    /// Minimization pipeline agrees with the strand oracle.
    #[serde(rename = "oracle")]
    OracleEquivalence,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Failure {
    pub trial: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub ideal: String,
    pub field: Field,
    pub observed: String,
    pub expected: String,
    /// Smaller witness found by dropping generators one at a time.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shrunk: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub field: Field,
    pub attempted: usize,
    pub passed: usize,
    pub oracle_cross_checks: usize,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_secs: Option<f64>,
}

impl VerificationReport {
    pub fn is_success(&self) -> bool {
        self.failures.is_empty() && self.passed == self.attempted
    }

    /// Fold another report on the same theorem into this one.
    pub fn merge(&mut self, other: VerificationReport) {
        let offset = self.attempted;
        self.attempted += other.attempted;
        self.passed += other.passed;
        self.oracle_cross_checks += other.oracle_cross_checks;
        self.failures.extend(other.failures.into_iter().map(|mut f| {
            f.trial += offset;
            f
        }));
        self.wall_time_secs = match (self.wall_time_secs, other.wall_time_secs) {
            (Some(a), Some(b)) => Some(a + b),
            (a, b) => a.or(b),
        };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Outcome of one check on one ideal.
#[derive(Clone, Debug, PartialEq)]
enum Check {
    Pass { cross_checked: bool },
    Fail { observed: String, expected: String },
}

impl Check {
    fn fail(observed: impl Into<String>, expected: impl Into<String>) -> Self {
        Check::Fail {
            observed: observed.into(),
            expected: expected.into(),
        }
    }
}

/// Seed for trial `trial` of a suite started from `seed` (splitmix64 mix).
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    let mut z = seed.wrapping_add((trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Taylor complex that has passed the homogeneity and `d^2 = 0` checks.
fn checked_taylor(ideal: &MonomialIdeal, field: Field) -> Result<FreeComplex> {
    let complex = taylor(ideal, field)?;
    complex.check()?;
    Ok(complex)
}

/// Result of running the minimization pipeline on one ideal.
pub struct Pipeline {
    pub taylor: FreeComplex,
    pub minimal: FreeComplex,
    pub betti: BettiTable,
}

/// Taylor complex, structural checks on it, minimization, minimality of the
/// result, and the Betti table.
pub fn run_pipeline(ideal: &MonomialIdeal, field: Field) -> Result<Pipeline> {
    let taylor = checked_taylor(ideal, field)?;
    let (minimal, _) = minimize(&taylor)?;
    if let Some((s, _, _)) = minimal.first_invertible() {
        return Err(Error::Invariant(format!(
            "minimized complex still has an invertible entry in f_{s}"
        )));
    }
    let betti = betti_from_complex(&minimal)?;
    if betti.betti(0) != 1 || betti.betti(1) != ideal.q() {
        return Err(Error::Invariant(format!(
            "beta_0 = {}, beta_1 = {} for {} generators",
            betti.betti(0),
            betti.betti(1),
            ideal.q()
        )));
    }
    Ok(Pipeline {
        taylor,
        minimal,
        betti,
    })
}

/// Compare the pipeline's table with the oracle's; `None` when equal.
fn oracle_mismatch(ideal: &MonomialIdeal, betti: &BettiTable, field: Field) -> Result<Option<Check>> {
    let oracle = full_betti(ideal, field)?;
    if oracle == *betti {
        Ok(None)
    } else {
        Ok(Some(Check::fail(
            format!("minimization: {}", json_of(betti)),
            format!("oracle: {}", json_of(&oracle)),
        )))
    }
}

fn json_of(betti: &BettiTable) -> String {
    serde_json::to_string(&betti.to_json()).expect("table serializes")
}

fn fmt_betti_at(values: &BTreeMap<usize, usize>) -> String {
    let parts: Vec<String> = values.iter().map(|(i, b)| format!("{i}:{b}")).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Shrink a failing ideal by removing generators greedily while the check
/// keeps failing.
fn shrink(ideal: &MonomialIdeal, fails: &dyn Fn(&MonomialIdeal) -> bool) -> Option<MonomialIdeal> {
    let mut current = ideal.clone();
    let mut improved = false;
    'outer: loop {
        if current.q() <= 1 {
            break;
        }
        for drop in 0..current.q() {
            let gens = current
                .gens()
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != drop)
                .map(|(_, g)| g.clone());
            let smaller = MonomialIdeal::minimalize(current.ctx(), gens).ok()?;
            if fails(&smaller) {
                current = smaller;
                improved = true;
                continue 'outer;
            }
        }
        break;
    }
    improved.then_some(current)
}

fn failed(check: &Result<Check>) -> bool {
    !matches!(check, Ok(Check::Pass { .. }))
}

/// Run `trials` independent trials in parallel and assemble a report.
fn run_suite<G, C>(theorem: Theorem, field: Field, trials: usize, seed: u64, generate: G, check: C) -> Result<VerificationReport>
where
    G: Fn(u64) -> Result<MonomialIdeal> + Sync,
    C: Fn(&MonomialIdeal, bool) -> Result<Check> + Sync,
{
    let start = Instant::now();
    let ideals = (0..trials)
        .map(|t| generate(trial_seed(seed, t)))
        .collect::<Result<Vec<_>>>()?;
    let outcomes: Vec<Result<Check>> = ideals
        .par_iter()
        .enumerate()
        .map(|(t, ideal)| check(ideal, t % 10 == 0))
        .collect();
    let mut report = VerificationReport {
        theorem,
        field,
        attempted: trials,
        passed: 0,
        oracle_cross_checks: 0,
        failures: Vec::new(),
        wall_time_secs: None,
    };
    for (t, (ideal, outcome)) in ideals.iter().zip(outcomes).enumerate() {
        match outcome {
            Ok(Check::Pass { cross_checked }) => {
                report.passed += 1;
                report.oracle_cross_checks += usize::from(cross_checked);
            }
            other => {
                let (observed, expected) = match other {
                    Ok(Check::Fail { observed, expected }) => (observed, expected),
                    Err(e) => (format!("error: {e}"), "no error".to_string()),
                    Ok(Check::Pass { .. }) => unreachable!(),
                };
                let shrunk = shrink(ideal, &|m| failed(&check(m, true))).map(|m| m.display());
                report.failures.push(Failure {
                    trial: t,
                    seed: Some(trial_seed(seed, t)),
                    ideal: ideal.display(),
                    field,
                    observed,
                    expected,
                    shrunk,
                });
            }
        }
    }
    report.wall_time_secs = Some(start.elapsed().as_secs_f64());
    Ok(report)
}

/// Report for a fixed list of `(ideal, check)` evaluations.
fn single_report(theorem: Theorem, field: Field, ideal: &MonomialIdeal, checks: Vec<(String, Result<Check>)>, start: Instant) -> VerificationReport {
    let mut report = VerificationReport {
        theorem,
        field,
        attempted: checks.len(),
        passed: 0,
        oracle_cross_checks: 0,
        failures: Vec::new(),
        wall_time_secs: None,
    };
    for (t, (label, outcome)) in checks.into_iter().enumerate() {
        match outcome {
            Ok(Check::Pass { cross_checked }) => {
                report.passed += 1;
                report.oracle_cross_checks += usize::from(cross_checked);
            }
            Ok(Check::Fail { observed, expected }) => report.failures.push(Failure {
                trial: t,
                seed: None,
                ideal: ideal.display(),
                field,
                observed: format!("{label}: {observed}"),
                expected,
                shrunk: None,
            }),
            Err(e) => report.failures.push(Failure {
                trial: t,
                seed: None,
                ideal: ideal.display(),
                field,
                observed: format!("{label}: error: {e}"),
                expected: "no error".into(),
                shrunk: None,
            }),
        }
    }
    report.wall_time_secs = Some(start.elapsed().as_secs_f64());
    report
}

/// Descent chains from every top-degree symbol: strictly increasing degrees,
/// starting at `>= min_first` and ending at `<= max_last`, of length `pd`.
pub fn check_descent_chains(minimal: &FreeComplex, min_first: u64, max_last: u64) -> Result<Option<String>> {
    let Some(p) = minimal.top_degree() else {
        return Ok(Some("empty complex".into()));
    };
    if p == 0 {
        return Ok(None);
    }
    for start in minimal.module(p) {
        let chain = descent_chain(minimal, start)?;
        let mut degrees: Vec<u64> = chain.iter().map(|s| s.degree()).collect();
        degrees.reverse();
        let increasing = degrees.windows(2).all(|w| w[0] < w[1]);
        let ok = increasing
            && degrees.len() == p
            && degrees[0] >= min_first
            && degrees[p - 1] <= max_last;
        if !ok {
            return Ok(Some(format!(
                "chain from {:?} has degrees {degrees:?} (want strictly increasing in [{min_first}, {max_last}], length {p})",
                start.indices()
            )));
        }
    }
    Ok(None)
}

fn pool(n: usize, min_deg: u32, max_deg: u32, squarefree: bool) -> usize {
    usize::try_from(candidate_pool(n, min_deg, max_deg, squarefree)).unwrap_or(usize::MAX)
}

/// Random squarefree ideals in `n` variables with every generator of degree
/// at least `k + 1`; asserts `pd(S/M) <= n - k` and the descent-chain degree
/// bounds.
pub fn verify_squarefree_bound(n: usize, q_max: usize, k: usize, trials: usize, seed: u64, field: Field) -> Result<VerificationReport> {
    if k + 1 > n {
        return Err(Error::Infeasible(format!(
            "no squarefree monomial in {n} variables has degree > {k}"
        )));
    }
    if q_max == 0 {
        return Err(Error::Infeasible("q_max must be at least 1".into()));
    }
    let ctx = VarContext::new(n)?;
    let pool = pool(n, k as u32 + 1, n as u32, true);
    run_suite(
        Theorem::SquarefreeBound,
        field,
        trials,
        seed,
        |s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let q = rng.random_range(1..=q_max.min(pool));
            random_ideal(&ctx, q, k as u32 + 1, n as u32, true, rng.random())
        },
        |ideal, sample| squarefree_bound_check(ideal, n, k, field, sample),
    )
}

fn squarefree_bound_check(ideal: &MonomialIdeal, n: usize, k: usize, field: Field, sample: bool) -> Result<Check> {
    let run = run_pipeline(ideal, field)?;
    let bound = n - k;
    if run.betti.pd > bound {
        return Ok(Check::fail(format!("pd = {}", run.betti.pd), format!("pd <= {bound}")));
    }
    // beta_{i,m} = 0 whenever deg m < i + (min generator degree - 1).
    let floor = ideal.min_degree().saturating_sub(1);
    for (i, m) in run.betti.multigraded.keys() {
        if *i >= 1 && m.total_degree() < *i as u64 + floor {
            return Ok(Check::fail(
                format!("beta_{{{i},{}}} != 0", ideal.ctx().format(m)),
                format!("zero below degree {}", *i as u64 + floor),
            ));
        }
    }
    if let Some(problem) = check_descent_chains(&run.minimal, k as u64 + 1, n as u64)? {
        return Ok(Check::fail(problem, "degree-increasing descent chain"));
    }
    if sample {
        if let Some(mismatch) = oracle_mismatch(ideal, &run.betti, field)? {
            return Ok(mismatch);
        }
    }
    Ok(Check::Pass {
        cross_checked: sample,
    })
}

/// Random monomial ideals in `n` variables with generators of degree
/// `1..=max_deg`; asserts `pd(S/M) <= n`.
pub fn verify_syzygy_bound(n: usize, q_max: usize, max_deg: u32, trials: usize, seed: u64, field: Field) -> Result<VerificationReport> {
    if q_max == 0 || max_deg == 0 {
        return Err(Error::Infeasible("q_max and max_deg must be at least 1".into()));
    }
    let ctx = VarContext::new(n)?;
    run_suite(
        Theorem::SyzygyBound,
        field,
        trials,
        seed,
        |s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let q = rng.random_range(1..=q_max.min(pool(n, 1, max_deg, false)));
            random_ideal(&ctx, q, 1, max_deg, false, rng.random())
        },
        |ideal, sample| syzygy_bound_check(ideal, n, field, sample),
    )
}

fn syzygy_bound_check(ideal: &MonomialIdeal, n: usize, field: Field, sample: bool) -> Result<Check> {
    let run = run_pipeline(ideal, field)?;
    if run.betti.pd > n {
        return Ok(Check::fail(format!("pd = {}", run.betti.pd), format!("pd <= {n}")));
    }
    if sample {
        if let Some(mismatch) = oracle_mismatch(ideal, &run.betti, field)? {
            return Ok(mismatch);
        }
    }
    Ok(Check::Pass {
        cross_checked: sample,
    })
}

/// Oracle values `beta_{.,m}` of `S/M` read off the strand of `complex`.
fn strand_at(complex: &FreeComplex, m: &Monomial) -> Result<BTreeMap<usize, usize>> {
    StrandComplex::new(complex, m).betti()
}

fn restriction_checks(ideal: &MonomialIdeal, field: Field) -> Result<Vec<(String, Result<Check>)>> {
    let run = run_pipeline(ideal, field)?;
    let mut checks = vec![(
        "pipeline".to_string(),
        oracle_mismatch(ideal, &run.betti, field).map(|m| m.unwrap_or(Check::Pass { cross_checked: true })),
    )];
    let lattice: Vec<Monomial> = lcm_lattice(ideal)?.into_iter().collect();
    let per_m: Vec<(String, Result<Check>)> = lattice
        .par_iter()
        .map(|m| {
            let label = format!("m = {}", ideal.ctx().format(m));
            let outcome = (|| {
                let left = strand_at(&run.taylor, m)?;
                let right = match ideal.restrict(m)? {
                    Restriction::Ideal(sub) => strand_at(&checked_taylor(&sub, field)?, m)?,
                    Restriction::Zero(_) => BTreeMap::new(),
                };
                Ok(if left == right {
                    Check::Pass {
                        cross_checked: false,
                    }
                } else {
                    Check::fail(
                        format!("beta(S/M) = {}", fmt_betti_at(&left)),
                        format!("beta(S/M_m) = {}", fmt_betti_at(&right)),
                    )
                })
            })();
            (label, outcome)
        })
        .collect();
    checks.extend(per_m);
    Ok(checks)
}

/// Restriction equality at every multidegree of the lcm lattice of `ideal`,
/// one check per multidegree plus a pipeline/oracle comparison.
pub fn verify_restriction(ideal: &MonomialIdeal, field: Field) -> Result<VerificationReport> {
    let start = Instant::now();
    let checks = restriction_checks(ideal, field)?;
    Ok(single_report(Theorem::Restriction, field, ideal, checks, start))
}

fn twin_check(ideal: &MonomialIdeal, field: Field) -> Result<Check> {
    let top = ideal.lcm();
    let left = strand_at(&checked_taylor(ideal, field)?, &top)?;
    let twin = ideal.twin();
    // A unit twin has S/M' = 0, so every Betti number vanishes.
    let right = if twin.is_unit() {
        BTreeMap::new()
    } else {
        strand_at(&checked_taylor(&twin, field)?, &top)?
    };
    Ok(if left == right {
        Check::Pass {
            cross_checked: false,
        }
    } else {
        Check::fail(
            format!("beta(S/M) at top lcm = {}", fmt_betti_at(&left)),
            format!("beta(S/M') at top lcm = {}", fmt_betti_at(&right)),
        )
    })
}

/// Twin equality at the top multidegree `lcm(M)`.
pub fn verify_twin(ideal: &MonomialIdeal, field: Field) -> Result<VerificationReport> {
    let start = Instant::now();
    let pipeline = run_pipeline(ideal, field)
        .and_then(|run| oracle_mismatch(ideal, &run.betti, field))
        .map(|m| m.unwrap_or(Check::Pass { cross_checked: true }));
    let checks = vec![
        ("pipeline".to_string(), pipeline),
        ("top lcm".to_string(), twin_check(ideal, field)),
    ];
    Ok(single_report(Theorem::Twin, field, ideal, checks, start))
}

fn compression_check(ideal: &MonomialIdeal, field: Field) -> Result<Check> {
    let twin = ideal.twin();
    if twin.is_unit() {
        return Ok(Check::Pass {
            cross_checked: false,
        });
    }
    let (compressed, map) = twin.compress()?;
    if !compressed.is_squarefree() {
        return Ok(Check::fail(compressed.display(), "a squarefree ideal"));
    }
    let original = run_pipeline(&twin, field)?.betti;
    let squarefree = run_pipeline(&compressed, field)?.betti;
    if original.pd != squarefree.pd {
        return Ok(Check::fail(
            format!("pd(S/M'') = {}", original.pd),
            format!("pd of compressed = {}", squarefree.pd),
        ));
    }
    if original.pd > ideal.ctx().n() {
        return Ok(Check::fail(
            format!("pd = {}", original.pd),
            format!("pd <= {}", ideal.ctx().n()),
        ));
    }
    let expanded: BTreeMap<(usize, Monomial), usize> = squarefree
        .multigraded
        .iter()
        .map(|((i, l), b)| Ok(((*i, map.expand(l)?), *b)))
        .collect::<Result<_>>()?;
    if expanded != original.multigraded {
        return Ok(Check::fail(
            format!("twin table {}", json_of(&original)),
            format!("expanded compressed table {}", json_of(&squarefree)),
        ));
    }
    Ok(Check::Pass {
        cross_checked: false,
    })
}

/// Twin ideal versus its squarefree compression: equal projective
/// dimension and multigraded tables matching under `y_j -> x_j^{alpha_j}`.
pub fn verify_compression(ideal: &MonomialIdeal, field: Field) -> Result<VerificationReport> {
    let start = Instant::now();
    let pipeline = run_pipeline(ideal, field)
        .and_then(|run| oracle_mismatch(ideal, &run.betti, field))
        .map(|m| m.unwrap_or(Check::Pass { cross_checked: true }));
    let checks = vec![
        ("pipeline".to_string(), pipeline),
        ("compression".to_string(), compression_check(ideal, field)),
    ];
    Ok(single_report(Theorem::Compression, field, ideal, checks, start))
}

/// A random ideal for the equality suites: `n` in `1..=n_max`, `q` in
/// `1..=q_max`, degrees in `1..=max_deg`, squarefree half of the time.
pub fn random_suite_ideal(seed: u64, n_max: usize, q_max: usize, max_deg: u32) -> Result<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=n_max);
    let ctx = VarContext::new(n)?;
    let squarefree = rng.random_bool(0.5);
    let max_deg = if squarefree { max_deg.min(n as u32) } else { max_deg };
    let q = rng.random_range(1..=q_max.min(pool(n, 1, max_deg, squarefree)));
    random_ideal(&ctx, q, 1, max_deg, squarefree, rng.random())
}

fn suite_check(theorem: Theorem, ideal: &MonomialIdeal, field: Field, sample: bool) -> Result<Check> {
    let run = run_pipeline(ideal, field)?;
    if sample {
        if let Some(mismatch) = oracle_mismatch(ideal, &run.betti, field)? {
            return Ok(mismatch);
        }
    }
    let outcome = match theorem {
        Theorem::Restriction => {
            let lattice = lcm_lattice(ideal)?;
            let mut outcome = Check::Pass {
                cross_checked: sample,
            };
            for m in &lattice {
                let left = strand_at(&run.taylor, m)?;
                let right = match ideal.restrict(m)? {
                    Restriction::Ideal(sub) => strand_at(&checked_taylor(&sub, field)?, m)?,
                    Restriction::Zero(_) => BTreeMap::new(),
                };
                if left != right {
                    outcome = Check::fail(
                        format!("m = {}: beta(S/M) = {}", ideal.ctx().format(m), fmt_betti_at(&left)),
                        format!("beta(S/M_m) = {}", fmt_betti_at(&right)),
                    );
                    break;
                }
            }
            outcome
        }
        Theorem::Twin => twin_check(ideal, field)?,
        Theorem::Compression => compression_check(ideal, field)?,
        Theorem::OracleEquivalence => oracle_mismatch(ideal, &run.betti, field)?.unwrap_or(Check::Pass {
            cross_checked: true,
        }),
        Theorem::SquarefreeBound | Theorem::SyzygyBound => {
            return Err(Error::Infeasible(format!("{theorem:?} has its own suite")));
        }
    };
    Ok(match outcome {
        Check::Pass { cross_checked } => Check::Pass {
            cross_checked: cross_checked || sample,
        },
        fail => fail,
    })
}

/// Random-ideal suite for the restriction, twin, compression or oracle
/// checks (one trial per ideal).
pub fn verify_suite(theorem: Theorem, n_max: usize, q_max: usize, max_deg: u32, trials: usize, seed: u64, field: Field) -> Result<VerificationReport> {
    if n_max == 0 || q_max == 0 || max_deg == 0 {
        return Err(Error::Infeasible("n_max, q_max and max_deg must be at least 1".into()));
    }
    if matches!(theorem, Theorem::SquarefreeBound | Theorem::SyzygyBound) {
        return Err(Error::Infeasible(format!("{theorem:?} has its own suite")));
    }
    run_suite(
        theorem,
        field,
        trials,
        seed,
        |s| random_suite_ideal(s, n_max, q_max, max_deg),
        |ideal, sample| suite_check(theorem, ideal, field, sample),
    )
}

/// Pipeline-versus-oracle equality over a fixed family of ideals; every
/// member is cross-checked.
pub fn verify_oracle_equivalence(ideals: &[MonomialIdeal], field: Field) -> VerificationReport {
    let start = Instant::now();
    let outcomes: Vec<Result<Check>> = ideals
        .par_iter()
        .map(|ideal| suite_check(Theorem::OracleEquivalence, ideal, field, true))
        .collect();
    let mut report = VerificationReport {
        theorem: Theorem::OracleEquivalence,
        field,
        attempted: ideals.len(),
        passed: 0,
        oracle_cross_checks: 0,
        failures: Vec::new(),
        wall_time_secs: None,
    };
    for (t, (ideal, outcome)) in ideals.iter().zip(outcomes).enumerate() {
        let (observed, expected) = match outcome {
            Ok(Check::Pass { .. }) => {
                report.passed += 1;
                report.oracle_cross_checks += 1;
                continue;
            }
            Ok(Check::Fail { observed, expected }) => (observed, expected),
            Err(e) => (format!("error: {e}"), "no error".into()),
        };
        report.failures.push(Failure {
            trial: t,
            seed: None,
            ideal: ideal.display(),
            field,
            observed,
            expected,
            shrunk: None,
        });
    }
    report.wall_time_secs = Some(start.elapsed().as_secs_f64());
    report
}

/// Every squarefree monomial ideal in `n` variables with between 1 and
/// `q_max` minimal generators, none equal to 1, each listed once.
pub fn all_squarefree_ideals(n: usize, q_max: usize) -> Result<Vec<MonomialIdeal>> {
    let ctx = VarContext::new(n)?;
    let monomials: Vec<u32> = (1u32..(1 << n)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<u32> = Vec::new();
    fn extend(start: usize, monomials: &[u32], chosen: &mut Vec<u32>, q_max: usize, emit: &mut dyn FnMut(&[u32])) {
        if !chosen.is_empty() {
            emit(chosen);
        }
        if chosen.len() == q_max {
            return;
        }
        for (i, &m) in monomials.iter().enumerate().skip(start) {
            if chosen.iter().all(|&c| c & m != c && c & m != m) {
                chosen.push(m);
                extend(i + 1, monomials, chosen, q_max, emit);
                chosen.pop();
            }
        }
    }
    let mut emit = |set: &[u32]| {
        let gens = set.iter().map(|&bits| {
            let exps: Vec<u32> = (0..n).map(|j| (bits >> j) & 1).collect();
            Monomial::from_exponents(&exps)
        });
        out.push(MonomialIdeal::minimalize(&ctx, gens));
    };
    extend(0, &monomials, &mut chosen, q_max, &mut emit);
    out.into_iter().collect()
}
