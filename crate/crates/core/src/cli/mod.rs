//! Command-line front end. Every subcommand prints one JSON document (or a
//! CSV table where offered) to stdout or `--out`.
//!
//! Exit status: 0 success, 1 usage or I/O error, 2 enumeration refused by
//! budget, 3 a verification check failed. Global flags can also be set
//! through `G31_FORMAT`, `G31_OUT`, `G31_SEED`, `G31_THREADS`, `G31_BUDGET`.

mod sweep;

pub use sweep::{parse_decimal, run_sweep, LRule, Method, SweepRow, SweepSpec};

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::bounds::{self, all_estimates, BoundEstimate};
use crate::construction::build_construction;
use crate::error::Error;
use crate::graph::{
    complement_accounting, count_induced_edges, graph_stats, read_subset_file, write_subset_file, Graph, SubsetFormat,
    VertexSubset,
};
use crate::independence::{decompose_claim1, for_each_independent_set, independence_number, Decomposition};
use crate::solver::{branch_and_bound_r, brute_force_r, local_search_r, SearchConfig, DEFAULT_ENUMERATION_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_REFUSED: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "g31", version, about = "Minimum induced edges in the graph G(n,3,1)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    #[arg(long, global = true, env = "G31_FORMAT", value_enum, default_value = "json")]
    pub format: OutputFormat,
    #[arg(long, global = true, env = "G31_OUT")]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, env = "G31_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, env = "G31_THREADS", default_value_t = 1)]
    pub threads: usize,
    /// Node budget for branch and bound, subset budget for the oracle.
    #[arg(long, global = true, env = "G31_BUDGET")]
    pub budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ExactMethod {
    Oracle,
    Bb,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Vertex, degree and edge counts.
    Stats { n: usize },
    /// Exact r(l) by enumeration or branch and bound.
    Exact {
        n: usize,
        l: u64,
        #[arg(long, value_enum, default_value = "bb")]
        method: ExactMethod,
        /// Wall-clock limit in seconds (branch and bound only).
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        no_symmetry: bool,
        #[command(flatten)]
        witness: WitnessOut,
    },
    /// Upper witness by local search.
    Heuristic {
        n: usize,
        l: u64,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
        #[command(flatten)]
        witness: WitnessOut,
    },
    /// Block construction for (n, l).
    Construct {
        n: usize,
        l: u64,
        /// Include the trimmed set in the JSON output.
        #[arg(long)]
        with_set: bool,
        #[command(flatten)]
        witness: WitnessOut,
    },
    /// Every bound estimate at (n, l).
    Bounds {
        n: usize,
        l: u64,
        /// Exact independence number to use instead of n.
        #[arg(long)]
        alpha: Option<u64>,
        /// Value for the unknown o(1) slack.
        #[arg(long, default_value_t = 0.0)]
        h: f64,
    },
    /// Independence number with witness.
    Alpha {
        n: usize,
        #[arg(long)]
        time_limit: Option<f64>,
    },
    /// Decompose an independent set into type-1/2/3 families.
    Decompose {
        n: usize,
        /// Subset file (JSON triples or hex bitset).
        #[arg(long, conflicts_with = "all")]
        subset: Option<PathBuf>,
        /// Decompose every independent set of the graph (small n only).
        #[arg(long)]
        all: bool,
    },
    /// Check edge accounting and the finite lower bound on subsets.
    Verify {
        n: usize,
        #[arg(long)]
        subset: Option<PathBuf>,
        /// Number of random subsets to check.
        #[arg(long, default_value_t = 100)]
        random: usize,
    },
    /// Batch evaluation over a grid of (n, l).
    Sweep {
        /// Inclusive range `a..b` or a single n.
        #[arg(long)]
        n_range: String,
        /// Absolute subset sizes, comma separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "c")]
        l: Vec<u64>,
        /// Complement densities, comma separated; l = round((1-c) C(n,3)).
        #[arg(long, value_delimiter = ',')]
        c: Vec<String>,
        #[arg(long, value_delimiter = ',', value_enum, default_value = "construction,bounds")]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 4)]
        restarts: usize,
    },
    /// Density threshold where the dense lower bounds beat the quadratic one.
    Crossover {
        /// Ground set size for the face-value inequality.
        #[arg(long, default_value_t = 1_000_000.0)]
        n: f64,
    },
}

#[derive(Args, Debug, Clone)]
pub struct WitnessOut {
    /// Write the witness set to this file.
    #[arg(long)]
    pub witness_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    pub witness_format: SubsetFormat,
}

impl WitnessOut {
    fn write(&self, w: &VertexSubset) -> Result<(), CliError> {
        if let Some(p) = &self.witness_out {
            write_subset_file(p, w, self.witness_format)?;
        }
        Ok(())
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Refused(String),
    #[error("{0}")]
    VerifyFailed(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::OverBudget { .. } => CliError::Refused(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Refused(_) => EXIT_REFUSED,
            CliError::VerifyFailed(_) => EXIT_VERIFY_FAILED,
        }
    }
}

/// Where output goes.
struct Sink {
    out: Option<PathBuf>,
}

impl Sink {
    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.out {
            Some(p) => fs::write(p, text).map_err(|e| CliError::Usage(format!("{}: {e}", p.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes()).map_err(|e| CliError::Usage(e.to_string()))
            }
        }
    }

    fn json<T: Serialize>(&self, v: &T) -> Result<(), CliError> {
        self.emit(&(serde_json::to_string(v).expect("serializable") + "\n"))
    }
}

/// Parses arguments and runs; returns the process exit status.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let msg = match &e {
                CliError::Usage(m) | CliError::Refused(m) | CliError::VerifyFailed(m) => m,
            };
            eprintln!("g31: {msg}");
            e.code()
        }
    }
}

fn seconds(s: Option<f64>) -> Option<Duration> {
    s.map(Duration::from_secs_f64)
}

#[derive(Serialize)]
struct BoundRow<'a> {
    source: &'a str,
    direction: bounds::Direction,
    validity: bounds::Validity,
    value: f64,
    exact: Option<String>,
    h_param: f64,
}

fn bound_rows(est: &[BoundEstimate]) -> Vec<BoundRow<'_>> {
    est.iter()
        .map(|e| BoundRow {
            source: e.source.label(),
            direction: e.direction,
            validity: e.validity,
            value: e.value,
            exact: e.exact.map(|r| r.to_string()),
            h_param: e.h_param,
        })
        .collect()
}

fn csv_text<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(|e| CliError::Usage(e.to_string()))?;
    }
    String::from_utf8(w.into_inner().map_err(|e| CliError::Usage(e.to_string()))?)
        .map_err(|e| CliError::Usage(e.to_string()))
}

#[derive(Serialize)]
struct DecompositionReport {
    parts: Vec<serde_json::Value>,
}

fn decomposition_json(d: &Decomposition) -> DecompositionReport {
    DecompositionReport {
        parts: d
            .parts
            .iter()
            .zip(&d.supports)
            .map(|((ft, part), sup)| {
                json!({
                    "family": ft,
                    "members": part.triples().map(|t| t.elements()).collect::<Vec<_>>(),
                    "support": sup,
                })
            })
            .collect(),
    }
}

#[derive(Serialize)]
struct VerifyCase {
    size: usize,
    edges_within_w: u64,
    edges_within_complement: u64,
    edges_crossing: u64,
    identity: bool,
    inequality: bool,
    dense_path_agrees: bool,
    lower_bound: i128,
    above_lower_bound: bool,
}

fn verify_subset(w: &VertexSubset) -> Result<VerifyCase, CliError> {
    let rep = complement_accounting(w);
    let counted = count_induced_edges(w);
    let lower = bounds::t3_4_floor(w.n(), w.len() as u64)?;
    Ok(VerifyCase {
        size: w.len(),
        edges_within_w: rep.edges_within_w,
        edges_within_complement: rep.edges_within_complement,
        edges_crossing: rep.edges_crossing,
        identity: rep.identity_holds(),
        inequality: rep.inequality_holds(),
        dense_path_agrees: counted == rep.edges_within_w,
        lower_bound: lower,
        above_lower_bound: i128::from(rep.edges_within_w) >= lower,
    })
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let g = cli.global;
    let sink = Sink { out: g.out.clone() };
    let search = SearchConfig { thread_count: g.threads.max(1), seed: g.seed, ..SearchConfig::default() };
    match cli.command {
        Command::Stats { n } => {
            let s = graph_stats(n)?;
            sink.json(&s)
        }
        Command::Exact { n, l, method, time_limit, no_symmetry, witness } => {
            let r = match method {
                ExactMethod::Oracle => brute_force_r(n, l, g.budget.map_or(DEFAULT_ENUMERATION_BUDGET, u128::from))?,
                ExactMethod::Bb => {
                    let cfg = SearchConfig {
                        node_budget: g.budget,
                        time_budget: seconds(time_limit),
                        root_symmetry: !no_symmetry,
                        ..search
                    };
                    branch_and_bound_r(n, l, &cfg)?
                }
            };
            witness.write(&r.witness)?;
            sink.json(&r.report())
        }
        Command::Heuristic { n, l, restarts, witness } => {
            let r = local_search_r(n, l, &SearchConfig { restarts, ..search })?;
            witness.write(&r.witness)?;
            sink.json(&r.report())
        }
        Command::Construct { n, l, with_set, witness } => {
            let p = build_construction(n, l)?;
            witness.write(&p.trimmed_set)?;
            sink.json(&p.report(with_set))
        }
        Command::Bounds { n, l, alpha, h } => {
            let est = all_estimates(n, l, alpha, h)?;
            let rows = bound_rows(&est);
            match g.format {
                OutputFormat::Json => sink.json(&json!({ "n": n, "l": l, "estimates": rows })),
                OutputFormat::Csv => sink.emit(&csv_text(&rows)?),
            }
        }
        Command::Alpha { n, time_limit } => {
            let r = independence_number(n, seconds(time_limit))?;
            sink.json(&r.report())
        }
        Command::Decompose { n, subset, all } => {
            if all {
                let graph = Graph::new(n)?;
                if graph.vertex_count() > 64 {
                    return Err(CliError::Usage("--all is limited to n <= 7".into()));
                }
                let (mut checked, mut failures) = (0u64, Vec::new());
                let mut err = None;
                for_each_independent_set(&graph, |set| {
                    checked += 1;
                    match VertexSubset::from_indices(n, set.iter().copied()).map_err(CliError::from) {
                        Ok(w) => {
                            if let Err(e) = decompose_claim1(&w) {
                                failures.push(json!({ "set": set, "error": e.to_string() }));
                            }
                        }
                        Err(e) => err = Some(e),
                    }
                });
                if let Some(e) = err {
                    return Err(e);
                }
                sink.json(&json!({ "n": n, "checked": checked, "failures": failures }))?;
                if !failures.is_empty() {
                    return Err(CliError::VerifyFailed(format!("{} sets failed to decompose", failures.len())));
                }
                Ok(())
            } else {
                let path = subset.ok_or_else(|| CliError::Usage("give --subset PATH or --all".into()))?;
                let w = read_subset_file(&path, n)?;
                match decompose_claim1(&w) {
                    Ok(d) => sink.json(&decomposition_json(&d)),
                    Err(e) => Err(CliError::VerifyFailed(e.to_string())),
                }
            }
        }
        Command::Verify { n, subset, random } => {
            let mut cases = Vec::new();
            if let Some(p) = subset {
                cases.push(verify_subset(&read_subset_file(&p, n)?)?);
            } else {
                let universe = graph_stats(n)?.vertices as usize;
                let mut rng = ChaCha8Rng::seed_from_u64(g.seed);
                for _ in 0..random {
                    let size = rand::Rng::gen_range(&mut rng, 0..=universe);
                    let picks = rand::seq::index::sample(&mut rng, universe, size);
                    cases.push(verify_subset(&VertexSubset::from_indices(n, picks)?)?);
                }
            }
            let failed = cases
                .iter()
                .filter(|c| !(c.identity && c.inequality && c.dense_path_agrees && c.above_lower_bound))
                .count();
            sink.json(&json!({ "n": n, "checked": cases.len(), "failed": failed, "cases": cases }))?;
            if failed > 0 {
                return Err(CliError::VerifyFailed(format!("{failed} subsets failed verification")));
            }
            Ok(())
        }
        Command::Sweep { n_range, l, c, methods, restarts } => {
            let (lo, hi) = parse_range(&n_range)?;
            let rule = if !c.is_empty() {
                LRule::Density(c.iter().map(|s| parse_decimal(s)).collect::<Result<_, _>>()?)
            } else {
                LRule::Absolute(l)
            };
            let spec = SweepSpec { n_min: lo, n_max: hi, rule, methods, restarts, search, node_budget: g.budget };
            let rows = run_sweep(&spec)?;
            match g.format {
                OutputFormat::Csv => sink.emit(&csv_text(&rows)?),
                OutputFormat::Json => sink.json(&rows),
            }
        }
        Command::Crossover { n } => {
            let c = bounds::normalized_crossover();
            let printed = bounds::REFERENCE_CROSSOVER_PREFIX;
            sink.json(&json!({
                "normalized_threshold": c,
                "reference_prefix": printed,
                "matches_printed_prefix": format!("{c:.6}").starts_with(printed),
                "residual": c * c + 18.0 * c - 9.0,
                "linear_bracket_threshold": bounds::linear_bracket_crossover(),
                "literal": {
                    "n": n,
                    "threshold": bounds::literal_crossover(n),
                    "holds_at_c_0_1": bounds::literal_inequality_holds(n, 0.1),
                },
            }))
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad n range {s:?}; use a..b or a single n"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = a.trim().parse().map_err(|_| bad())?;
    let hi: usize = b.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}
