//! Argument parsing and dispatch for the `mwpsp` binary.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use mwpsp::solver::{self, AnnealSchedule, ExactOptions, Policy, SolveReport};
use mwpsp::{
    io, maximum_spanning_tree, relocation_as_flips, transform_with, vertex_relocate, Error, Exact, ExactInstance,
    Face, MoveSequence, TransformOptions, Triangulation,
};

#[derive(Parser, Debug)]
#[command(name = "mwpsp", version, about = "Maximal planar graph moves and maximum-weight planar subgraphs")]
struct Cli {
    /// Worker threads for exhaustive search.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Seed for randomized heuristics.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Limit on distinct triangulations visited by exhaustive search.
    #[arg(long, global = true)]
    budget: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a triangulation file.
    Validate {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
    },
    /// Maximum spanning tree of an instance.
    Mst {
        #[arg(short = 'i', long = "instance")]
        instance: PathBuf,
    },
    /// Heuristic solve: greedy construction plus optional local search.
    Solve {
        #[arg(short = 'i', long = "instance")]
        instance: PathBuf,
        #[arg(long, value_enum, default_value_t = Construct::MstGreedy)]
        construct: Construct,
        #[arg(long, value_enum, default_value_t = Improve::Steepest)]
        improve: Improve,
        /// Annealing sweeps.
        #[arg(long, default_value_t = 100)]
        sweeps: usize,
    },
    /// Exhaustive search over all triangulations (n <= 9).
    Exact {
        #[arg(short = 'i', long = "instance")]
        instance: PathBuf,
        /// File of `u v` lines that every solution must contain.
        #[arg(long)]
        forced: Option<PathBuf>,
        /// List every optimum instead of the first one.
        #[arg(long)]
        all_optima: bool,
    },
    /// Flip sequence turning one triangulation into another.
    Flipseq {
        #[arg(short = 'a')]
        from: PathBuf,
        #[arg(short = 'b')]
        to: PathBuf,
    },
    /// Move a degree-3 vertex into another face.
    Relocate {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'u')]
        vertex: u32,
        /// Target face as `a,b,c`.
        #[arg(short = 'f', value_parser = parse_face)]
        face: Face,
        /// Print the equivalent flip sequence instead of the new graph.
        #[arg(long)]
        compile: bool,
    },
    /// List every labeled triangulation on n vertices, one JSON object per line.
    Enumerate {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Print the built-in eight-vertex instance.
    Counterexample,
    /// Write a triangulation as DOT.
    ExportDot {
        #[arg(short = 'g', long = "graph")]
        graph: PathBuf,
        #[arg(short = 'o', long = "output")]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Construct {
    MstGreedy,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Improve {
    None,
    Steepest,
    First,
    Anneal,
}

fn parse_face(text: &str) -> Result<Face, String> {
    let ids: Vec<u32> = text
        .split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| format!("invalid vertex {t:?}")))
        .collect::<Result<_, _>>()?;
    let [a, b, c] = ids[..] else {
        return Err("expected three comma-separated vertices".into());
    };
    Face::new(a, b, c).map_err(|e| e.to_string())
}

enum Failure {
    Input(String),
    Resource(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => 1,
            Failure::Resource(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Resource(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NOutOfRange { .. } | Error::BudgetExceeded { .. } | Error::SearchExhausted { .. } => {
                Failure::Resource(e.to_string())
            }
            Error::MoveFailed { ref source, .. } if Failure::from((**source).clone()).code() == 2 => {
                Failure::Resource(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Triangulation, Failure> {
    serde_json::from_str(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_instance(path: &Path) -> Result<ExactInstance, Failure> {
    io::parse_instance(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
/// Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let budget = cli.budget.unwrap_or(usize::MAX);
    match cli.command {
        Command::Validate { graph } => {
            let g = read_graph(&graph)?;
            writeln!(out, "valid: n={} edges={} faces={}", g.n(), g.edges().len(), g.faces().len())?;
        }
        Command::Mst { instance } => {
            let w = read_instance(&instance)?;
            let t = maximum_spanning_tree(&w);
            let edges: Vec<[u32; 2]> = t.edges().iter().map(|e| [e.lo(), e.hi()]).collect();
            let value = serde_json::json!({
                "n": t.n(),
                "edges": edges,
                "weight": mwpsp::Weight::to_decimal(&t.weight(&w)),
            });
            writeln!(out, "{}", json(&value))?;
        }
        Command::Solve { instance, construct: Construct::MstGreedy, improve, sweeps } => {
            let w = read_instance(&instance)?;
            let g0 = solver::mst_greedy(&w)?;
            let policy = match improve {
                Improve::None => None,
                Improve::Steepest => Some(Policy::Steepest),
                Improve::First => Some(Policy::FirstImprovement),
                Improve::Anneal => Some(Policy::Anneal(AnnealSchedule { sweeps, ..AnnealSchedule::with_seed(cli.seed) })),
            };
            let mut report = match policy {
                Some(p) => solver::local_search(&g0, &w, &p)?,
                None => SolveReport {
                    method: String::new(),
                    seed: None,
                    best_weight: g0.weight(&w)?,
                    best_graphs: vec![g0],
                    optima_capped: false,
                    explored: 1,
                    trace: Some(MoveSequence::new()),
                },
            };
            report.method = match report.method.as_str() {
                "" => "mst-greedy".into(),
                m => format!("mst-greedy+{m}"),
            };
            writeln!(out, "{}", json(&report))?;
        }
        Command::Exact { instance, forced, all_optima } => {
            let w = read_instance(&instance)?;
            let forced = match forced {
                Some(path) => io::parse_edge_list(&read(&path)?, w.n())
                    .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
                None => BTreeSet::new(),
            };
            let opts = ExactOptions { budget, workers: cli.workers, ..ExactOptions::default() };
            let mut report: SolveReport<Exact> = solver::exact_mwpsp_with(&w, &forced, &opts)?;
            if !all_optima {
                report.best_graphs.truncate(1);
            }
            writeln!(out, "{}", json(&report))?;
        }
        Command::Flipseq { from, to } => {
            let (g, h) = (read_graph(&from)?, read_graph(&to)?);
            let mut opts = TransformOptions::default();
            if let Some(b) = cli.budget {
                opts.search_budget = b;
            }
            writeln!(out, "{}", json(&transform_with(&g, &h, &opts)?))?;
        }
        Command::Relocate { graph, vertex, face, compile } => {
            let g = read_graph(&graph)?;
            if compile {
                writeln!(out, "{}", json(&relocation_as_flips(&g, vertex, face)?))?;
            } else {
                writeln!(out, "{}", json(&vertex_relocate(&g, vertex, face)?))?;
            }
        }
        Command::Enumerate { n, count_only } => {
            if count_only {
                writeln!(out, "{}", solver::count_triangulations(n, budget)?)?;
            } else {
                for g in solver::enumerate_triangulations(n, budget)? {
                    writeln!(out, "{}", serde_json::to_string(&g?).expect("serializable value"))?;
                }
            }
        }
        Command::Counterexample => {
            write!(out, "{}", io::write_instance(&solver::counterexample_instance::<Exact>()))?;
        }
        Command::ExportDot { graph, output } => {
            let g = read_graph(&graph)?;
            std::fs::write(&output, io::export_dot(&g))
                .map_err(|e| Failure::Input(format!("{}: {e}", output.display())))?;
        }
    }
    Ok(())
}
