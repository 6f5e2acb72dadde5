//! `cyclocover`: solve, verify, generate and bench from the command line.
//!
//! Exit codes: 0 success or valid, 1 invalid solution or bench violation,
//! 2 input error, 3 search limit exceeded.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use cyclocover_core::bench::{run_bench, BenchConfig};
use cyclocover_core::instances::{gen_family, Family, FamilySpec};
use cyclocover_core::oracle::{verify_path_system, verify_set, VerificationReport};
use cyclocover_core::{
    good_edge_set, solve_paths, solve_set, Error, Graph, Method, PathMode, PathSystem, Problem, SolutionSet,
};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "cyclocover", version, about = "Covering constructions bounded by cyclomatic number and leaves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one problem on a graph file and print the solution as JSON.
    Solve(SolveArgs),
    /// Check a solution file produced by `solve`.
    Verify(VerifyArgs),
    /// Print a graph from a named family as an edge list.
    Gen(GenArgs),
    /// Run every construction on seeded instances and report violations.
    Bench(BenchArgs),
    /// Print a good edge set F for a root as a JSON edge array.
    GoodEdges(GoodEdgesArgs),
}

#[derive(Args)]
struct OutputArgs {
    /// Compact single-line JSON instead of pretty-printed JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    problem: String,
    #[arg(long, default_value = "construct")]
    method: String,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    root: Option<usize>,
    /// Largest set size tried by the brute-force solver.
    #[arg(long)]
    limit: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    problem: String,
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    solution: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    family: String,
    /// Comma-separated family parameters.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    params: Vec<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 25)]
    n: usize,
    #[arg(long, default_value_t = 5)]
    cmax: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra instances as `family:p1,p2,...` or `family:p1,...@seed`.
    #[arg(long, num_args = 1..)]
    families: Vec<String>,
    /// Add the bouquet, K2,k plus edge and spider tight families.
    #[arg(long)]
    tight: bool,
    #[arg(long, default_value_t = 10)]
    exact_upto: usize,
    #[arg(long, default_value_t = 200)]
    verify_upto: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct GoodEdgesArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    root: usize,
    #[command(flatten)]
    output: OutputArgs,
}

/// A failure together with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::LimitExceeded(_) => 3,
            Error::InternalInvariantViolation(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

enum Target {
    Set(Problem),
    Paths(PathMode),
}

impl FromStr for Target {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "ipec" | "ipp" => PathMode::from_str(s).map(Target::Paths),
            _ => Problem::from_str(s).map(Target::Set),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Bench(a) => cmd_bench(a),
        Command::GoodEdges(a) => cmd_good_edges(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read_text(path)?).map_err(|e| input_error(format!("{}: {e}", path.display())))
}

fn print_json<T: Serialize>(value: &T, output: &OutputArgs) {
    let text = if output.json {
        serde_json::to_string(value)
    } else {
        serde_json::to_string_pretty(value)
    };
    println!("{}", text.expect("serializable output"));
}

fn cmd_solve(a: SolveArgs) -> Result<u8, Failure> {
    let target = Target::from_str(&a.problem)?;
    let method = Method::from_str(&a.method)?;
    let g = read_graph(&a.graph)?;
    match target {
        Target::Set(p) => print_json(&solve_set(p, method, &g, a.root, a.limit)?, &a.output),
        Target::Paths(m) => print_json(&solve_paths(m, method, &g, a.root)?, &a.output),
    }
    Ok(0)
}

fn check_range(ids: impl IntoIterator<Item = usize>, n: usize) -> Result<(), Failure> {
    match ids.into_iter().find(|&v| v >= n) {
        Some(v) => Err(Error::VertexOutOfRange { vertex: v, n }.into()),
        None => Ok(()),
    }
}

fn cmd_verify(a: VerifyArgs) -> Result<u8, Failure> {
    let target = Target::from_str(&a.problem)?;
    let g = read_graph(&a.graph)?;
    let text = read_text(&a.solution)?;
    let bad_json = |e: serde_json::Error| input_error(format!("{}: {e}", a.solution.display()));
    let report: VerificationReport = match target {
        Target::Set(p) => {
            let s: SolutionSet = serde_json::from_str(&text).map_err(bad_json)?;
            if s.problem != p {
                return Err(input_error(format!("solution is for {}, not {p}", s.problem)));
            }
            check_range(s.vertices.iter().copied(), g.n())?;
            verify_set(p, &g, &s.vertices)?
        }
        Target::Paths(m) => {
            let ps: PathSystem = serde_json::from_str(&text).map_err(bad_json)?;
            if ps.mode != m {
                return Err(input_error(format!("solution is for {}, not {}", ps.mode.tag(), m.tag())));
            }
            check_range(ps.paths.iter().flatten().copied(), g.n())?;
            verify_path_system(&g, &ps)
        }
    };
    print_json(&report, &a.output);
    Ok(if report.valid { 0 } else { 1 })
}

fn cmd_gen(a: GenArgs) -> Result<u8, Failure> {
    let spec = FamilySpec {
        family: Family::from_str(&a.family)?,
        parameters: a.params,
        seed: a.seed,
    };
    let text = gen_family(&spec)?.to_edge_list();
    match a.out {
        Some(path) => fs::write(&path, text).map_err(|e| input_error(format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}

/// Parses `family:p1,p2,...` with an optional `@seed` suffix.
fn parse_family_spec(s: &str) -> Result<FamilySpec, Failure> {
    let (body, seed) = match s.split_once('@') {
        Some((body, seed)) => {
            let seed = seed.parse().map_err(|_| input_error(format!("bad seed in `{s}`")))?;
            (body, Some(seed))
        }
        None => (s, None),
    };
    let (name, params) = body.split_once(':').unwrap_or((body, ""));
    let parameters = params
        .split(',')
        .filter(|p| !p.is_empty())
        .map(|p| p.trim().parse().map_err(|_| input_error(format!("bad parameter `{p}` in `{s}`"))))
        .collect::<Result<Vec<usize>, Failure>>()?;
    Ok(FamilySpec {
        family: Family::from_str(name)?,
        parameters,
        seed,
    })
}

fn tight_families() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let spec = |family, parameters| FamilySpec {
        family,
        parameters,
        seed: None,
    };
    for k in 1..=2usize {
        for l in 0..=3usize {
            let mut p = vec![k];
            p.extend(std::iter::repeat_n(5, k));
            p.push(l);
            p.extend(std::iter::repeat_n(1, l));
            out.push(spec(Family::Bouquet, p));
        }
    }
    for k in 2..=4 {
        out.push(spec(Family::K2kPlusEdge, vec![k]));
    }
    for t in 2..=5 {
        out.push(spec(Family::Spider, vec![t]));
    }
    out
}

fn cmd_bench(a: BenchArgs) -> Result<u8, Failure> {
    let mut families = if a.tight { tight_families() } else { Vec::new() };
    for s in &a.families {
        families.push(parse_family_spec(s)?);
    }
    let cfg = BenchConfig {
        trials: a.trials,
        n: a.n,
        cmax: a.cmax,
        seed: a.seed,
        families,
        exact_upto: a.exact_upto,
        verify_upto: a.verify_upto,
    };
    if cfg.trials > 0 && cfg.n < 2 {
        return Err(input_error("--n must be at least 2"));
    }
    let report = run_bench(&cfg)?;
    print_json(&report, &a.output);
    for r in &report.records {
        for v in &r.violations {
            eprintln!("violation: {} (seed {:?}): {v}", r.id, r.seed);
        }
    }
    Ok(if report.summary.violations == 0 { 0 } else { 1 })
}

#[derive(Serialize)]
struct GoodEdgesOutput {
    root: usize,
    cyclomatic: usize,
    edges: Vec<[usize; 2]>,
}

fn cmd_good_edges(a: GoodEdgesArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.graph)?;
    check_range([a.root], g.n())?;
    let ges = good_edge_set(&g, a.root);
    let out = GoodEdgesOutput {
        root: a.root,
        cyclomatic: g.cyclomatic_number(),
        edges: ges.edges().iter().map(|e| [e.u, e.v]).collect(),
    };
    print_json(&out, &a.output);
    Ok(0)
}
