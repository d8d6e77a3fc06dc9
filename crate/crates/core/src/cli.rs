//! Command-line front end. [`run`] takes the argument vector and two writers
//! and returns the process exit code, so it can be driven from tests.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage, input or
//! parameter error.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::Error;
use crate::field::Field;
use crate::harness::{self, Theorem, VerificationReport};
use crate::ideal::{format_ideal, parse_ideal, random_ideal, MonomialIdeal, Restriction};
use crate::minimize::{betti_from_complex, minimize, BettiTable};
use crate::monomial::{Monomial, VarContext};
use crate::oracle::strand_homology;
use crate::taylor::{taylor_capped, TaylorStats, DEFAULT_GENERATOR_CAP};

#[derive(Parser, Debug)]
#[command(name = "syzygy", version, about = "Minimal free resolutions and Betti numbers of monomial ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the Taylor complex and report module ranks.
    Taylor {
        #[command(flatten)]
        common: Common,
        /// Emit `{"q", "ranks", "distinct_multidegrees"}` as JSON.
        #[arg(long)]
        stats: bool,
    },
    /// Minimize the Taylor complex by consecutive cancellation.
    Minimize {
        #[command(flatten)]
        common: Common,
        /// Emit every cancellation as a JSON line.
        #[arg(long)]
        trace: bool,
    },
    /// Betti table of S/M.
    Betti {
        #[command(flatten)]
        common: Common,
        /// Compute by strand homology of the Taylor complex instead.
        #[arg(long)]
        oracle: bool,
    },
    /// Projective dimension of S/M.
    Pd {
        #[command(flatten)]
        common: Common,
    },
    /// Twin ideal.
    Twin {
        #[command(flatten)]
        common: Common,
    },
    /// Restriction to the generators dividing a monomial.
    Restrict {
        #[command(flatten)]
        common: Common,
        #[arg(long = "mono", value_name = "MONOMIAL")]
        mono: String,
    },
    /// Squarefree compression `y_j = x_j^alpha_j` of a twin ideal.
    Compress {
        #[command(flatten)]
        common: Common,
        /// Replace the input by its twin ideal first.
        #[arg(long)]
        twin: bool,
    },
    /// Seeded random ideal, printed in the ideal file format.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 1)]
        min_deg: u32,
        #[arg(long, default_value_t = 3)]
        max_deg: u32,
        #[arg(long)]
        squarefree: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Check a projective-dimension bound or Betti-number equality.
    Verify {
        #[command(subcommand)]
        which: Verify,
    },
}

#[derive(Subcommand, Debug)]
enum Verify {
    /// Squarefree ideals with generators of degree > k: pd <= n - k.
    T31 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 8)]
        q_max: usize,
        #[command(flatten)]
        suite: Suite,
    },
    /// Arbitrary monomial ideals: pd <= n.
    T46 {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 8)]
        q_max: usize,
        #[arg(long, default_value_t = 4)]
        max_deg: u32,
        #[command(flatten)]
        suite: Suite,
    },
    /// Restriction equality at every lcm-lattice multidegree.
    C42(EqualityArgs),
    /// Twin equality at the top lcm.
    T45(EqualityArgs),
    /// Twin ideal versus its squarefree compression.
    Compress(EqualityArgs),
}

#[derive(Args, Debug)]
struct Suite {
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "q")]
    field: Field,
    /// Include wall time in the report (breaks byte-identical output).
    #[arg(long)]
    timing: bool,
    #[command(flatten)]
    output: Output,
}

/// With `--ideal`, check that ideal; otherwise run a random suite.
#[derive(Args, Debug)]
struct EqualityArgs {
    #[arg(long, value_name = "FILE")]
    ideal: Option<PathBuf>,
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    #[arg(long, default_value_t = 6)]
    q_max: usize,
    #[arg(long, default_value_t = 3)]
    max_deg: u32,
    #[command(flatten)]
    suite: Suite,
}

#[derive(Args, Debug)]
struct Output {
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct Common {
    /// Ideal file (`ring ...` line, then `gen ...` lines).
    #[arg(long, value_name = "FILE", conflicts_with = "gens", required_unless_present = "gens")]
    ideal: Option<PathBuf>,
    /// Comma-separated generators, e.g. `x^2*y, y*z`.
    #[arg(long, requires = "ring")]
    gens: Option<String>,
    /// Variable count or space-separated names (with `--gens`).
    #[arg(long)]
    ring: Option<String>,
    /// `q` for the rationals or `zp:<prime>`.
    #[arg(long, default_value = "q")]
    field: Field,
    /// Raise the generator cap for the Taylor complex.
    #[arg(long, value_name = "Q", default_value_t = DEFAULT_GENERATOR_CAP)]
    max_gens: usize,
    #[command(flatten)]
    output: Output,
}

/// Failure modes of a command: bad input (exit 2) or a failed check (exit 1).
enum Failure {
    Input(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = std::result::Result<String, Failure>;

/// Parse `argv` (including the program name) and execute. Normal output goes
/// to `out` unless `--out` names a file; diagnostics go to `err`.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let target = output_of(&cli.command).and_then(|o| o.out.clone());
    let (code, text) = match execute(cli.command) {
        Ok(text) => (0, text),
        Err(Failure::Verification(text)) => (1, text),
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    match target {
        Some(path) => {
            if let Err(e) = fs::write(&path, &text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    code
}

fn output_of(command: &Command) -> Option<&Output> {
    Some(match command {
        Command::Taylor { common, .. }
        | Command::Minimize { common, .. }
        | Command::Betti { common, .. }
        | Command::Pd { common }
        | Command::Twin { common }
        | Command::Restrict { common, .. }
        | Command::Compress { common, .. } => &common.output,
        Command::Random { output, .. } => output,
        Command::Verify { which } => match which {
            Verify::T31 { suite, .. } | Verify::T46 { suite, .. } => &suite.output,
            Verify::C42(a) | Verify::T45(a) | Verify::Compress(a) => &a.suite.output,
        },
    })
}

fn read_ideal_file(path: &PathBuf) -> std::result::Result<MonomialIdeal, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_ideal(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(common: &Common) -> std::result::Result<MonomialIdeal, Failure> {
    if let Some(path) = &common.ideal {
        return read_ideal_file(path);
    }
    let ring = common.ring.as_deref().unwrap_or_default().trim();
    let ctx = match ring.parse::<usize>() {
        Ok(n) => VarContext::new(n)?,
        Err(_) => VarContext::with_names(ring.split_whitespace())?,
    };
    let gens = common.gens.as_deref().unwrap_or_default();
    Ok(MonomialIdeal::from_strs(&ctx, gens.split(',').map(str::trim))?)
}

#[derive(Serialize)]
struct IdealJson<'a> {
    field: Field,
    ring: &'a [String],
    gens: Vec<String>,
}

fn ideal_json(ideal: &MonomialIdeal, field: Field) -> IdealJson<'_> {
    IdealJson {
        field,
        ring: ideal.ctx().names(),
        gens: ideal.gens().iter().map(|g| ideal.ctx().format(g)).collect(),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn betti_of(ideal: &MonomialIdeal, common: &Common, oracle: bool) -> std::result::Result<BettiTable, Failure> {
    let complex = taylor_capped(ideal, common.field, common.max_gens)?;
    Ok(if oracle {
        BettiTable::from_multigraded(common.field, ideal.ctx().clone(), strand_homology(&complex)?)?
    } else {
        betti_from_complex(&minimize(&complex)?.0)?
    })
}

fn execute(command: Command) -> CmdResult {
    match command {
        Command::Taylor { common, stats } => {
            let ideal = load(&common)?;
            let complex = taylor_capped(&ideal, common.field, common.max_gens)?;
            let s = TaylorStats::of(&complex, &ideal);
            if stats || common.output.json {
                #[derive(Serialize)]
                struct Stats {
                    field: Field,
                    #[serde(flatten)]
                    stats: TaylorStats,
                }
                return Ok(to_json(&Stats {
                    field: common.field,
                    stats: s,
                }));
            }
            let mut text = String::new();
            for (i, r) in s.ranks.iter().enumerate() {
                text += &format!("F_{i}: rank {r}\n");
            }
            text += &format!("distinct multidegrees = {}\nfield = {}\n", s.distinct_multidegrees, common.field);
            Ok(text)
        }
        Command::Minimize { common, trace } => {
            let ideal = load(&common)?;
            let complex = taylor_capped(&ideal, common.field, common.max_gens)?;
            let (minimal, steps) = minimize(&complex)?;
            if trace {
                return Ok(steps.to_json_lines());
            }
            if common.output.json {
                #[derive(Serialize)]
                struct Summary {
                    field: Field,
                    taylor_ranks: Vec<usize>,
                    minimal_ranks: Vec<usize>,
                    cancellations: usize,
                }
                return Ok(to_json(&Summary {
                    field: common.field,
                    taylor_ranks: complex.ranks(),
                    minimal_ranks: minimal.ranks(),
                    cancellations: steps.len(),
                }));
            }
            let fmt = |r: Vec<usize>| r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
            Ok(format!(
                "taylor ranks:  {}\nminimal ranks: {}\ncancellations = {}\nfield = {}\n",
                fmt(complex.ranks()),
                fmt(minimal.ranks()),
                steps.len(),
                common.field
            ))
        }
        Command::Betti { common, oracle } => {
            let ideal = load(&common)?;
            let betti = betti_of(&ideal, &common, oracle)?;
            if common.output.json {
                Ok(to_json(&betti.to_json()))
            } else {
                Ok(betti.to_table_string() + "\n")
            }
        }
        Command::Pd { common } => {
            let ideal = load(&common)?;
            let betti = betti_of(&ideal, &common, false)?;
            if common.output.json {
                #[derive(Serialize)]
                struct Pd {
                    field: Field,
                    pd: usize,
                }
                Ok(to_json(&Pd {
                    field: common.field,
                    pd: betti.pd,
                }))
            } else {
                Ok(format!("pd = {}\nfield = {}\n", betti.pd, common.field))
            }
        }
        Command::Twin { common } => {
            let ideal = load(&common)?;
            Ok(ideal_output(&ideal.twin(), &common))
        }
        Command::Restrict { common, mono } => {
            let ideal = load(&common)?;
            let m: Monomial = ideal.ctx().parse(&mono)?;
            match ideal.restrict(&m)? {
                Restriction::Ideal(sub) => Ok(ideal_output(&sub, &common)),
                Restriction::Zero(ctx) if common.output.json => Ok(to_json(&IdealJson {
                    field: common.field,
                    ring: ctx.names(),
                    gens: Vec::new(),
                })),
                Restriction::Zero(_) => Ok(format!("0\nfield = {}\n", common.field)),
            }
        }
        Command::Compress { common, twin } => {
            let mut ideal = load(&common)?;
            if twin {
                ideal = ideal.twin();
            }
            let (compressed, map) = ideal.compress()?;
            if common.output.json {
                #[derive(Serialize)]
                struct Compressed<'a> {
                    #[serde(flatten)]
                    ideal: IdealJson<'a>,
                    alpha: &'a [u32],
                    used_vars: &'a [usize],
                }
                return Ok(to_json(&Compressed {
                    ideal: ideal_json(&compressed, common.field),
                    alpha: &map.alpha,
                    used_vars: &map.used_vars,
                }));
            }
            let alpha: Vec<String> = map.alpha.iter().map(u32::to_string).collect();
            Ok(format!(
                "{}\nalpha = ({})\nfield = {}\n",
                compressed.display(),
                alpha.join(", "),
                common.field
            ))
        }
        Command::Random {
            n,
            q,
            min_deg,
            max_deg,
            squarefree,
            seed,
            output,
        } => {
            let ctx = VarContext::new(n)?;
            let ideal = random_ideal(&ctx, q, min_deg, max_deg, squarefree, seed)?;
            if output.json {
                Ok(to_json(&ideal_json(&ideal, Field::default())))
            } else {
                Ok(format_ideal(&ideal))
            }
        }
        Command::Verify { which } => verify(which),
    }
}

fn ideal_output(ideal: &MonomialIdeal, common: &Common) -> String {
    if common.output.json {
        to_json(&ideal_json(ideal, common.field))
    } else {
        format!("{}\nfield = {}\n", ideal.display(), common.field)
    }
}

fn verify(which: Verify) -> CmdResult {
    let (report, timing): (VerificationReport, bool) = match which {
        Verify::T31 { n, k, q_max, suite } => (
            harness::verify_squarefree_bound(n, q_max, k, suite.trials, suite.seed, suite.field)?,
            suite.timing,
        ),
        Verify::T46 {
            n,
            q_max,
            max_deg,
            suite,
        } => (
            harness::verify_syzygy_bound(n, q_max, max_deg, suite.trials, suite.seed, suite.field)?,
            suite.timing,
        ),
        Verify::C42(args) => (equality(Theorem::Restriction, &args)?, args.suite.timing),
        Verify::T45(args) => (equality(Theorem::Twin, &args)?, args.suite.timing),
        Verify::Compress(args) => (equality(Theorem::Compression, &args)?, args.suite.timing),
    };
    let mut report = report;
    if !timing {
        report.wall_time_secs = None;
    }
    let text = report.to_json() + "\n";
    if report.is_success() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn equality(theorem: Theorem, args: &EqualityArgs) -> std::result::Result<VerificationReport, Failure> {
    let field = args.suite.field;
    let Some(path) = &args.ideal else {
        let s = &args.suite;
        return Ok(harness::verify_suite(theorem, args.n_max, args.q_max, args.max_deg, s.trials, s.seed, field)?);
    };
    let ideal = read_ideal_file(path)?;
    Ok(match theorem {
        Theorem::Restriction => harness::verify_restriction(&ideal, field)?,
        Theorem::Twin => harness::verify_twin(&ideal, field)?,
        _ => harness::verify_compression(&ideal, field)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("syzygy").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn inline_generators() {
        let (code, out, _) = call(&["twin", "--gens", "x^2*y^2*z, x^2*z^2, y*z^2", "--ring", "x y z"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x^2*y^2, z^2\nfield = q\n");
        let (code, out, _) = call(&["pd", "--gens", "x1, x2, x3", "--ring", "3", "--field", "zp:7"]);
        assert_eq!(code, 0);
        assert_eq!(out, "pd = 3\nfield = zp:7\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["betti"]).0, 2);
        assert_eq!(call(&["betti", "--gens", "x", "--ring", "1", "--field", "zp:8"]).0, 2);
        let (code, _, err) = call(&["betti", "--gens", "x*w", "--ring", "x y"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown variable"), "{err}");
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn cap_override() {
        let gens: Vec<String> = (1..=20).map(|i| format!("x{i}")).collect();
        let gens = gens.join(", ");
        let (code, _, err) = call(&["taylor", "--stats", "--gens", &gens, "--ring", "20"]);
        assert_eq!(code, 2);
        assert!(err.contains("--max-gens"), "{err}");
    }
}
