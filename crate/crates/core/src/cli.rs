//! Command-line front end. [`run`] takes the argument vector and output
//! sinks and returns the process exit code, so it can be driven from tests.

use std::ffi::OsString;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::brooks::{brooks_list_color, check_hypotheses, SolveError};
use crate::chordal::{chordality_certificate, ChordalityCertificate};
use crate::coloring::ListAssignment;
use crate::format::{emit_coloring, emit_instance, parse_coloring, parse_instance, Instance};
use crate::generate::{describe, generate, GeneratorConfig, Model};
use crate::oracle::{brute_force_list_color, verify_coloring, BruteForceOutcome, DEFAULT_NODE_LIMIT};

pub mod exit {
    pub const OK: i32 = 0;
    pub const HOLE: i32 = 1;
    pub const HYPOTHESIS_VIOLATION: i32 = 2;
    pub const DEFECT: i32 = 3;
    pub const UNSATISFIABLE: i32 = 4;
    pub const LIMIT_EXCEEDED: i32 = 5;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const NO_INPUT: i32 = 66;
    pub const SOFTWARE: i32 = 70;
}

/// Environment variable capping `--seedrun` parallelism.
pub const THREADS_ENV: &str = "BROOKS_COLOR_THREADS";

#[derive(Debug, Parser)]
#[command(name = "brooks-color", version, about = "Certifying list coloring for Brooks-type instances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a perfect elimination ordering or a hole.
    Chordal { file: PathBuf },
    /// List-color an instance (or a batch of generated ones).
    Color {
        /// Instance file; required unless --seedrun is given.
        file: Option<PathBuf>,
        /// Use the list {1..K} on every vertex.
        #[arg(long, value_name = "K")]
        uniform: Option<usize>,
        /// Generate and solve N instances with seeds SEED..SEED+N.
        #[arg(long, value_name = "N")]
        seedrun: Option<u64>,
        #[command(flatten)]
        gen: GenArgs,
    },
    /// Check a coloring file against an instance.
    Verify {
        file: PathBuf,
        coloring: PathBuf,
        #[arg(long, value_name = "K")]
        uniform: Option<usize>,
    },
    /// Exhaustive list-coloring search.
    Oracle {
        file: PathBuf,
        #[arg(long, value_name = "N", default_value_t = DEFAULT_NODE_LIMIT)]
        limit: u64,
        #[arg(long, value_name = "K")]
        uniform: Option<usize>,
    },
    /// Write a generated instance to stdout.
    Gen {
        #[command(flatten)]
        gen: GenArgs,
    },
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, default_value_t = 10)]
    n: u32,
    #[arg(long, default_value_t = 3)]
    delta: usize,
    #[arg(long, default_value = "tree-plus-edges")]
    model: Model,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "list-size", default_value_t = 3)]
    list_size: usize,
    /// Lists are drawn from colors 1..=PALETTE.
    #[arg(long, default_value_t = 6)]
    palette: u32,
    /// Edge probability for the gnp-capped model.
    #[arg(long = "p", default_value_t = 0.5)]
    edge_probability: f64,
}

impl GenArgs {
    fn config(&self, seed: u64) -> GeneratorConfig {
        GeneratorConfig {
            n: self.n,
            delta: self.delta,
            model: self.model,
            seed,
            palette: self.palette,
            list_size: self.list_size,
            edge_probability: self.edge_probability,
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

type Outcome = Result<i32, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let result = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    result.map_err(|e| Failure::new(exit::NO_INPUT, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = read_input(path)?;
    parse_instance(&text).map_err(|e| Failure::new(exit::DATA, format!("{}: {e}", path.display())))
}

fn lists_for(instance: &Instance, uniform: Option<usize>) -> Result<ListAssignment, Failure> {
    match (uniform, &instance.lists) {
        (Some(k), _) => Ok(ListAssignment::uniform(&instance.graph, k)),
        (None, Some(lists)) => Ok(lists.clone()),
        (None, None) => Err(Failure::new(
            exit::DATA,
            "instance has no list lines; pass --uniform K",
        )),
    }
}

fn join(vertices: &[u32]) -> String {
    vertices.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_chordal(file: &Path, out: &mut dyn Write) -> Outcome {
    let instance = load(file)?;
    let certificate = chordality_certificate(&instance.graph)
        .map_err(|e| Failure::new(exit::SOFTWARE, e.to_string()))?;
    let (label, vertices, code) = match &certificate {
        ChordalityCertificate::Peo(peo) => ("chordal", peo.order(), exit::OK),
        ChordalityCertificate::Hole(hole) => ("hole", hole.vertices(), exit::HOLE),
    };
    let line = if vertices.is_empty() {
        label.to_string()
    } else {
        format!("{label} {}", join(vertices))
    };
    writeln!(out, "{line}").map_err(io_failure)?;
    Ok(code)
}

fn solve_error(e: SolveError) -> Failure {
    match e {
        SolveError::HypothesisViolation(report) => Failure::new(
            exit::HYPOTHESIS_VIOLATION,
            format!("HypothesisViolation: {report}"),
        ),
        SolveError::MissingList(v) => Failure::new(exit::DATA, format!("vertex {v} has no list")),
        other => Failure::new(exit::SOFTWARE, other.to_string()),
    }
}

fn cmd_color(file: &Path, uniform: Option<usize>, out: &mut dyn Write) -> Outcome {
    let instance = load(file)?;
    let lists = lists_for(&instance, uniform)?;
    match brooks_list_color(&instance.graph, &lists) {
        Ok(coloring) => {
            out.write_all(emit_coloring(&coloring).as_bytes()).map_err(io_failure)?;
            Ok(exit::OK)
        }
        Err(e) => {
            let failure = solve_error(e);
            if failure.code == exit::HYPOTHESIS_VIOLATION {
                writeln!(out, "{}", failure.message).map_err(io_failure)?;
                Ok(failure.code)
            } else {
                Err(failure)
            }
        }
    }
}

enum RunResult {
    Pass,
    Skip(String),
    Fail(String),
}

fn run_seed(gen: &GenArgs, uniform: Option<usize>, seed: u64) -> RunResult {
    let config = gen.config(seed);
    let instance = match generate(&config) {
        Ok(i) => i,
        Err(e) => return RunResult::Fail(e.to_string()),
    };
    let lists = match uniform {
        Some(k) => ListAssignment::uniform(&instance.graph, k),
        None => instance.lists.clone().expect("generator emits lists"),
    };
    match check_hypotheses(&instance.graph, &lists) {
        Ok(report) if !report.is_ok() => return RunResult::Skip("hypothesis".into()),
        Ok(_) => {}
        Err(e) => return RunResult::Fail(e.to_string()),
    }
    match brooks_list_color(&instance.graph, &lists) {
        Ok(coloring) => match verify_coloring(&instance.graph, &lists, &coloring) {
            Ok(()) => RunResult::Pass,
            Err(defect) => RunResult::Fail(defect.to_string()),
        },
        Err(e) => RunResult::Fail(e.to_string()),
    }
}

fn thread_limit() -> Option<usize> {
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&n| n > 0)
}

fn cmd_seedrun(gen: &GenArgs, uniform: Option<usize>, count: u64, out: &mut dyn Write) -> Outcome {
    let seeds: Vec<u64> = (0..count).map(|i| gen.seed.wrapping_add(i)).collect();
    let work = || -> Vec<RunResult> { seeds.par_iter().map(|&s| run_seed(gen, uniform, s)).collect() };
    let results = match thread_limit() {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Failure::new(exit::SOFTWARE, e.to_string()))?
            .install(work),
        None => work(),
    };
    let mut rows: Vec<(u64, RunResult)> = seeds.into_iter().zip(results).collect();
    rows.sort_by_key(|(seed, _)| *seed);
    let (mut pass, mut fail, mut skip) = (0, 0, 0);
    for (seed, result) in &rows {
        let line = match result {
            RunResult::Pass => {
                pass += 1;
                format!("seed {seed} pass")
            }
            RunResult::Skip(why) => {
                skip += 1;
                format!("seed {seed} skip {why}")
            }
            RunResult::Fail(why) => {
                fail += 1;
                format!("seed {seed} fail {why}")
            }
        };
        writeln!(out, "{line}").map_err(io_failure)?;
    }
    writeln!(out, "pass {pass} fail {fail} skip {skip}").map_err(io_failure)?;
    Ok(if fail == 0 { exit::OK } else { exit::SOFTWARE })
}

fn cmd_verify(file: &Path, coloring: &Path, uniform: Option<usize>, out: &mut dyn Write) -> Outcome {
    let instance = load(file)?;
    let lists = lists_for(&instance, uniform)?;
    let text = read_input(coloring)?;
    let phi = parse_coloring(&text)
        .map_err(|e| Failure::new(exit::DATA, format!("{}: {e}", coloring.display())))?;
    match verify_coloring(&instance.graph, &lists, &phi) {
        Ok(()) => {
            writeln!(out, "ok").map_err(io_failure)?;
            Ok(exit::OK)
        }
        Err(defect) => {
            writeln!(out, "defect: {defect}").map_err(io_failure)?;
            Ok(exit::DEFECT)
        }
    }
}

fn cmd_oracle(file: &Path, limit: u64, uniform: Option<usize>, out: &mut dyn Write) -> Outcome {
    let instance = load(file)?;
    let lists = lists_for(&instance, uniform)?;
    let (text, code) = match brute_force_list_color(&instance.graph, &lists, limit) {
        BruteForceOutcome::Colored(phi) => (emit_coloring(&phi), exit::OK),
        BruteForceOutcome::Unsatisfiable => ("unsatisfiable\n".to_string(), exit::UNSATISFIABLE),
        BruteForceOutcome::LimitExceeded => ("limit-exceeded\n".to_string(), exit::LIMIT_EXCEEDED),
    };
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(code)
}

fn cmd_gen(gen: &GenArgs, out: &mut dyn Write) -> Outcome {
    let config = gen.config(gen.seed);
    let instance = generate(&config).map_err(|e| Failure::new(exit::USAGE, e.to_string()))?;
    let text = emit_instance(&instance.graph, instance.lists.as_ref(), &describe(&config))
        .map_err(|e| Failure::new(exit::SOFTWARE, e.to_string()))?;
    out.write_all(text.as_bytes()).map_err(io_failure)?;
    Ok(exit::OK)
}

fn io_failure(e: io::Error) -> Failure {
    Failure::new(exit::SOFTWARE, format!("write failed: {e}"))
}

/// Runs the CLI and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let outcome = match &cli.command {
        Command::Chordal { file } => cmd_chordal(file, out),
        Command::Color {
            file,
            uniform,
            seedrun,
            gen,
        } => match (file, seedrun) {
            (_, Some(count)) => cmd_seedrun(gen, *uniform, *count, out),
            (Some(file), None) => cmd_color(file, *uniform, out),
            (None, None) => Err(Failure::new(exit::USAGE, "color needs FILE or --seedrun N")),
        },
        Command::Verify {
            file,
            coloring,
            uniform,
        } => cmd_verify(file, coloring, *uniform, out),
        Command::Oracle { file, limit, uniform } => cmd_oracle(file, *limit, *uniform, out),
        Command::Gen { gen } => cmd_gen(gen, out),
    };
    match outcome {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}
