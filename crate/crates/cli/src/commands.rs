//! Argument parsing and dispatch for the `csp` binary.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use csp_core::cone::{
    brute_force_lattice_points, cone_dimension, count_lattice_points, is_extreme, parameter_lattice_count,
    prefix_sums, prime_polytope_vertices, project_universal, ray_family, swap_decompose,
};
use csp_core::json::parse_rational;
use csp_core::schur::{principal_specialization, rsw_evaluate};
use csp_core::sieve::{csp_exists, decide_from_table};
use csp_core::{BigInt, CspDecision, CspMatrix, CycPoly, EvalTable, Partition, Swap, Verdict};
use serde::Serialize;
use serde_json::json;

use crate::appendix::{check_appendix_inequalities, AppendixRanges};
use crate::catalan::catalan_sweep;
use crate::error::{CliError, Result};
use crate::grid::{threads_from_env, verify_conjecture_grid_with_threads};
use crate::io::{parse_as, read_file};

#[derive(Debug, Parser)]
#[command(name = "csp", version, about = "Exact cyclic sieving computations")]
pub struct Cli {
    /// Print JSON (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    pub json: bool,
    /// Print plain text tables instead of JSON.
    #[arg(long, global = true)]
    pub table: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a polynomial mod q^n - 1 can be complemented to a CSP.
    CheckPoly(PolyArgs),
    /// The same decision from the values at ω_n^1, …, ω_n^n.
    Sieve(TableArgs),
    #[command(subcommand)]
    Schur(SchurCommand),
    #[command(subcommand)]
    Cone(ConeCommand),
    /// Sweep stretched Schur specializations over (λ, m, n).
    Grid(GridArgs),
    /// Root-of-unity values of q-Catalan numbers for n ≤ max-n.
    Catalan {
        #[arg(long, default_value_t = 30)]
        max_n: usize,
    },
    /// Exact checks of the binomial and harmonic-sum inequalities.
    Appendix {
        #[arg(long, default_value_t = 6)]
        grid_max: usize,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 20)]
        random_max: usize,
        #[arg(long, default_value_t = AppendixRanges::default().seed)]
        seed: u64,
    },
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, required_unless_present = "file")]
    pub n: Option<usize>,
    /// Comma-separated coefficients, constant term first; reduced mod q^n - 1.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required_unless_present = "file")]
    pub coeffs: Vec<BigInt>,
    /// `{"n": 6, "coeffs": [...]}`
    #[arg(long, conflicts_with_all = ["n", "coeffs"])]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long, required_unless_present = "file")]
    pub n: Option<usize>,
    /// Comma-separated values f(ω_n^k) for k = 1..=n.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required_unless_present = "file")]
    pub values: Vec<BigInt>,
    /// `{"n": 6, "values": [...]}`
    #[arg(long, conflicts_with_all = ["n", "values"])]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum SchurCommand {
    /// s_λ(1, q, …, q^{m-1}).
    Spec {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        m: usize,
    },
    /// The value of s_λ(1, q, …, q^{m-1}) at a primitive d-th root of unity.
    Eval {
        #[arg(long)]
        shape: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum ConeCommand {
    /// Whether the matrix is a CSP matrix.
    Verify(FileArg),
    /// The universal matrix with the same column sums.
    Project(FileArg),
    /// Unit swaps from the universal projection back to the matrix.
    Decompose(FileArg),
    /// Extreme rays of the cone for size n.
    Rays {
        #[arg(long)]
        n: usize,
    },
    /// Vertices of the norm-m slice of the prime cone.
    Vertices {
        #[arg(long)]
        p: usize,
        /// A rational, `7` or `7/2`.
        #[arg(long, value_parser = parse_rational_arg)]
        m: csp_core::BigRational,
    },
    /// Integer CSP matrices of prime size p with entry sum m.
    Count {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        m: usize,
        /// Also enumerate all non-negative p x p matrices as a cross-check.
        #[arg(long)]
        brute_force: bool,
    },
}

#[derive(Debug, Args)]
pub struct FileArg {
    /// `{"n": 6, "rows": [["2", "1/2", ...], ...]}`
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// The reduced grid (4, 4, 6).
    #[arg(long, conflicts_with_all = ["max_weight", "max_m", "max_n"])]
    pub fast: bool,
    #[arg(long)]
    pub max_weight: Option<usize>,
    #[arg(long)]
    pub max_m: Option<usize>,
    #[arg(long)]
    pub max_n: Option<usize>,
    /// Worker threads; defaults to CSP_THREADS, then to the number of cores.
    #[arg(long)]
    pub threads: Option<usize>,
}

fn parse_rational_arg(s: &str) -> std::result::Result<csp_core::BigRational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// What the binary prints and returns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, success: bool) -> Self {
        Outcome { stdout, stderr: String::new(), code: if success { 0 } else { 1 } }
    }

    fn error(e: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: 2 }
    }
}

/// Parses `args` (program name first) and runs the command.
///
/// Exit code 0 when every verdict is yes or every check holds, 1 otherwise,
/// 2 for usage, input and hypothesis errors.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code: 2 }
            } else {
                Outcome { stdout: text, stderr: String::new(), code: 0 }
            };
        }
    };
    match execute(&cli) {
        Ok((out, success)) => Outcome::ok(out, success),
        Err(e) => Outcome::error(e),
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("outputs serialize");
    s.push('\n');
    s
}

fn matrix_table(m: &CspMatrix) -> String {
    let mut s = m.to_string();
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn decision_table(d: &CspDecision) -> String {
    let mut s = String::new();
    if let Some(ev) = &d.evaluations {
        let _ = writeln!(s, "evaluations: {}", join(ev));
    }
    if let Some(sv) = &d.sieve {
        let _ = writeln!(s, "sieve: {}", join(sv));
    }
    let _ = write!(s, "verdict: {}", if d.is_yes() { "yes" } else { "no" });
    if let (Some(r), Some(k)) = (&d.reason, d.witness_k) {
        let _ = write!(s, " ({}, k={k})", serde_json::to_value(r).expect("serializes").as_str().unwrap_or(""));
    }
    s.push('\n');
    s
}

fn load_matrix(path: &std::path::Path) -> Result<CspMatrix> {
    parse_as(&read_file(path)?)
}

fn execute(cli: &Cli) -> Result<(String, bool)> {
    let table = cli.table;
    match &cli.command {
        Command::CheckPoly(a) => {
            let p: CycPoly = match &a.file {
                Some(f) => parse_as(&read_file(f)?)?,
                None => CycPoly::reduce(&a.coeffs, a.n.expect("clap enforces --n"))?,
            };
            let d = csp_exists(&p);
            let out = if table { decision_table(&d) } else { to_json(&d) };
            Ok((out, d.is_yes()))
        }
        Command::Sieve(a) => {
            let t: EvalTable = match &a.file {
                Some(f) => parse_as(&read_file(f)?)?,
                None => EvalTable::new(a.n.expect("clap enforces --n"), a.values.clone())?,
            };
            let d = decide_from_table(&t);
            let out = if table { decision_table(&d) } else { to_json(&d) };
            Ok((out, d.is_yes()))
        }
        Command::Schur(SchurCommand::Spec { shape, m }) => {
            let f = principal_specialization(shape, *m);
            let out = if table {
                format!("{f}\n")
            } else {
                to_json(&json!({ "shape": shape, "m": m, "coeffs": f }))
            };
            Ok((out, true))
        }
        Command::Schur(SchurCommand::Eval { shape, m, d }) => {
            let v = rsw_evaluate(shape, *m, *d)?;
            let out = if table {
                format!("{v}\n")
            } else {
                to_json(&json!({ "shape": shape, "m": m, "d": d, "value": v.to_string() }))
            };
            Ok((out, true))
        }
        Command::Cone(c) => cone(c, table),
        Command::Grid(g) => {
            let (w, m, n) = if g.fast {
                (4, 4, 6)
            } else {
                (g.max_weight.unwrap_or(6), g.max_m.unwrap_or(6), g.max_n.unwrap_or(12))
            };
            if w == 0 || m == 0 || n == 0 {
                return Err(CliError::Usage("grid bounds must be at least 1".into()));
            }
            let r = verify_conjecture_grid_with_threads(w, m, n, g.threads.or_else(threads_from_env))?;
            let out = if table {
                let mut s = String::new();
                for e in r.entries.iter().filter(|e| e.verdict != Verdict::Yes || !e.paths_agree) {
                    let _ = writeln!(s, "{} m={} n={} {:?} agree={}", e.shape, e.m, e.n, e.verdict, e.paths_agree);
                }
                let _ = writeln!(
                    s,
                    "points: {}  yes: {}  no: {}  path disagreements: {}  time: {:.2?}",
                    r.summary.points, r.summary.yes, r.summary.no, r.summary.path_disagreements, r.duration
                );
                s
            } else {
                let mut s = r.to_json();
                s.push('\n');
                s
            };
            Ok((out, r.all_yes()))
        }
        Command::Catalan { max_n } => {
            if *max_n == 0 {
                return Err(CliError::Usage("--max-n must be at least 1".into()));
            }
            let r = catalan_sweep(*max_n)?;
            let out = if table {
                let mut s = String::new();
                for e in &r.entries {
                    let _ = writeln!(
                        s,
                        "n={} values_match={} verdict={:?} evaluations={}",
                        e.n,
                        e.values_match,
                        e.verdict,
                        join(&e.evaluations)
                    );
                }
                s
            } else {
                to_json(&r)
            };
            Ok((out, r.all_yes()))
        }
        Command::Appendix { grid_max, samples, random_max, seed } => {
            let r = check_appendix_inequalities(AppendixRanges {
                grid_max: *grid_max,
                random_samples: *samples,
                random_max: *random_max,
                seed: *seed,
            })?;
            let out = if table {
                let mut s = String::new();
                for c in &r.checks {
                    let _ = writeln!(s, "{}: {} samples, {} violations", c.name, c.samples, c.violations);
                    if let Some(v) = &c.first_violation {
                        let _ = writeln!(s, "  first violation at {v}");
                    }
                }
                s
            } else {
                to_json(&r)
            };
            Ok((out, r.all_hold()))
        }
    }
}

fn cone(c: &ConeCommand, table: bool) -> Result<(String, bool)> {
    match c {
        ConeCommand::Verify(f) => {
            let a = load_matrix(&f.file)?;
            let ok = a.verify();
            let out = if table { format!("{ok}\n") } else { to_json(&json!({ "verifies": ok })) };
            Ok((out, ok))
        }
        ConeCommand::Project(f) => {
            let u = project_universal(&load_matrix(&f.file)?)?;
            Ok((if table { matrix_table(&u) } else { to_json(&u) }, true))
        }
        ConeCommand::Decompose(f) => {
            let a = load_matrix(&f.file)?;
            let u = project_universal(&a)?;
            let swaps = swap_decompose(&a, &u)?;
            let prefixes = prefix_sums(&u, &swaps)?;
            let ok = prefixes.iter().all(CspMatrix::verify) && prefixes.last() == Some(&a);
            #[derive(Serialize)]
            struct Decomposition<'a> {
                universal: &'a CspMatrix,
                swaps: &'a [Swap],
                prefixes_verify: bool,
            }
            let out = if table {
                let mut s = matrix_table(&u);
                for sw in &swaps {
                    let _ = writeln!(s, "{:?} {:?} {}", sw.u(), sw.v(), sw.amount());
                }
                let _ = writeln!(s, "{} swaps, prefixes verify: {ok}", swaps.len());
                s
            } else {
                to_json(&Decomposition { universal: &u, swaps: &swaps, prefixes_verify: ok })
            };
            Ok((out, ok))
        }
        ConeCommand::Rays { n } => {
            let rays = ray_family(*n)?;
            let extreme = rays.iter().map(is_extreme).collect::<csp_core::Result<Vec<_>>>()?;
            let ok = extreme.iter().all(|&e| e);
            let out = if table {
                let mut s = format!("cone dimension {}, {} rays\n", cone_dimension(*n), rays.len());
                for r in &rays {
                    s.push_str(&matrix_table(r));
                    s.push('\n');
                }
                s
            } else {
                to_json(&json!({ "n": n, "dimension": cone_dimension(*n), "rays": rays }))
            };
            Ok((out, ok))
        }
        ConeCommand::Vertices { p, m } => {
            let vs = prime_polytope_vertices(*p, m)?;
            let out = if table {
                vs.iter().map(|v| matrix_table(v) + "\n").collect()
            } else {
                to_json(&vs)
            };
            Ok((out, true))
        }
        ConeCommand::Count { p, m, brute_force } => {
            let count = count_lattice_points(*p, *m)?;
            let params = parameter_lattice_count(*p, *m)?;
            let brute = if *brute_force { Some(brute_force_lattice_points(*p, *m)?) } else { None };
            let ok = brute.as_ref().is_none_or(|b| b == &count);
            let out = if table {
                let mut s = format!("matrices: {count}\nparameter points: {params}\n");
                if let Some(b) = &brute {
                    let _ = writeln!(s, "brute force: {b}");
                }
                s
            } else {
                to_json(&json!({
                    "p": p,
                    "m": m,
                    "count": count.to_string(),
                    "parameter_points": params.to_string(),
                    "brute_force": brute.map(|b| b.to_string()),
                }))
            };
            Ok((out, ok))
        }
    }
}
