//! Batch front end: color hypergraphs and graphs, verify colorings against
//! the definition-level checkers, generate seeded instances, and run
//! deterministic benchmark sweeps.
//!
//! Exit codes: 0 success/verified, 1 verification failure, 2 parse or usage
//! error, 3 internal invariant violation. All diagnostics go to stderr;
//! output is plain ASCII.

use std::collections::BTreeMap;
use std::io::Read;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hypercolor::dynamic_coloring::dynamic_color_run;
use hypercolor::format::{
    parse_coloring, parse_instance, write_coloring, write_graph, write_hypergraph, Instance,
};
use hypercolor::instance_gen::{random_graph, random_hypergraph, GenParams, SplitMix64};
use hypercolor::proper_coloring::{color_auto, color_k, color_k_plus_1, PipelineError};
use hypercolor::verify::{verify_dynamic, verify_proper_graph, verify_proper_hypergraph};
use hypercolor::{Coloring, Hypergraph, Multigraph, Parameters};

#[derive(Parser)]
#[command(name = "hypercolor", version, about = "Proper hypergraph and dynamic graph colorings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a hypergraph file; writes a coloring file and prints a summary
    Color {
        /// Input hypergraph file, or '-' for standard input
        input: String,
        /// k: exactly k colors (error if unavailable); k1: k+1 colors;
        /// auto: k when possible, k+1 otherwise
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
        /// Coloring output path (default: input with a .col extension, or
        /// standard output when reading from standard input)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Dynamically color a graph file; same outputs as `color`
    Dynamic {
        /// Input graph file, or '-' for standard input
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a coloring file against an instance; exit 0 iff it verifies
    Verify {
        instance: String,
        coloring: String,
        /// Which property to check (default: hyper for 'h' files, graph
        /// for 'g' files)
        #[arg(long, value_enum)]
        kind: Option<VerifyKind>,
    },
    /// Emit a seeded random instance
    Gen {
        #[arg(value_enum)]
        kind: GenKind,
        /// key=value parameters: hyper takes n, m, sizes=LO:HI, cap;
        /// graph takes n, p=NUM/DEN
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Color a seeded ensemble and print one CSV row per instance
    Bench {
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// key=value ranges: n=LO:HI, m=LO:HI, sizes=LO:HI, cap
        params: Vec<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    K,
    K1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    Hyper,
    Graph,
    Dynamic,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GenKind {
    Hyper,
    Graph,
}

enum CliError {
    /// Bad input or arguments: exit 2.
    Usage(String),
    /// A coloring that fails verification: exit 1.
    Verification,
    /// A library invariant violation: exit 3.
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Verification => ExitCode::from(1),
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Internal(_) => ExitCode::from(3),
        }
    }
}

impl From<PipelineError> for CliError {
    fn from(e: PipelineError) -> Self {
        match e {
            PipelineError::UseKPlusOne { .. } => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match catch_unwind(AssertUnwindSafe(|| run(cli.command))) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(err)) => {
            match &err {
                CliError::Usage(msg) | CliError::Internal(msg) => eprintln!("error: {msg}"),
                CliError::Verification => {}
            }
            err.exit_code()
        }
        Err(_) => {
            eprintln!("error: internal invariant violation");
            ExitCode::from(3)
        }
    }
}

fn read_input(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Usage(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("reading '{path}': {e}")))
    }
}

fn write_output(target: Option<&Path>, text: &str) -> Result<bool, CliError> {
    match target {
        Some(path) => {
            std::fs::write(path, text)
                .map_err(|e| CliError::Usage(format!("writing '{}': {e}", path.display())))?;
            Ok(false)
        }
        None => {
            print!("{text}");
            Ok(true)
        }
    }
}

fn parse_hypergraph_input(path: &str) -> Result<Hypergraph, CliError> {
    match parse_instance(&read_input(path)?) {
        Ok(Instance::Hypergraph(h)) => Ok(h),
        Ok(Instance::Graph(_)) => Err(CliError::Usage(format!(
            "'{path}' is a graph file, expected a hypergraph ('h' header)"
        ))),
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

fn parse_graph_input(path: &str) -> Result<Multigraph, CliError> {
    match parse_instance(&read_input(path)?) {
        Ok(Instance::Graph(g)) => Ok(g),
        Ok(Instance::Hypergraph(_)) => Err(CliError::Usage(format!(
            "'{path}' is a hypergraph file, expected a graph ('g' header)"
        ))),
        Err(e) => Err(CliError::Usage(e.to_string())),
    }
}

/// Default coloring destination: the input path with a .col extension, or
/// standard output when the instance came from standard input.
fn coloring_target(input: &str, output: Option<PathBuf>) -> Option<PathBuf> {
    output.or_else(|| {
        if input == "-" {
            None
        } else {
            Some(Path::new(input).with_extension("col"))
        }
    })
}

/// Key=value arguments into a map, rejecting unknown keys.
fn param_map(params: &[String], allowed: &[&str]) -> Result<BTreeMap<String, String>, CliError> {
    let mut map = BTreeMap::new();
    for item in params {
        let Some((key, value)) = item.split_once('=') else {
            return Err(CliError::Usage(format!("expected key=value, got '{item}'")));
        };
        if !allowed.contains(&key) {
            return Err(CliError::Usage(format!(
                "unknown parameter '{key}', expected one of {allowed:?}"
            )));
        }
        if map.insert(key.to_string(), value.to_string()).is_some() {
            return Err(CliError::Usage(format!("parameter '{key}' given twice")));
        }
    }
    Ok(map)
}

fn parse_num<T: std::str::FromStr>(value: &str, what: &str) -> Result<T, CliError> {
    value
        .parse()
        .map_err(|_| CliError::Usage(format!("bad {what}: '{value}'")))
}

/// "LO:HI" into an inclusive range; a bare number means LO=HI.
fn parse_range(value: &str, what: &str) -> Result<(usize, usize), CliError> {
    let (lo, hi) = match value.split_once(':') {
        Some((lo, hi)) => (parse_num(lo, what)?, parse_num(hi, what)?),
        None => {
            let v: usize = parse_num(value, what)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(CliError::Usage(format!("empty {what} range '{value}'")));
    }
    Ok((lo, hi))
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Color { input, mode, output } => cmd_color(&input, mode, output),
        Command::Dynamic { input, output } => cmd_dynamic(&input, output),
        Command::Verify { instance, coloring, kind } => cmd_verify(&instance, &coloring, kind),
        Command::Gen { kind, params, seed, output } => cmd_gen(kind, &params, seed, output),
        Command::Bench { count, seed, params } => cmd_bench(count, seed, &params),
    }
}

fn emit_coloring_and_summary(
    target: Option<PathBuf>,
    coloring: &Coloring,
    bound: usize,
) -> Result<(), CliError> {
    let to_stdout = write_output(target.as_deref(), &write_coloring(coloring))?;
    let summary = format!("colors={} bound={bound}", coloring.colors_used());
    if to_stdout {
        eprintln!("{summary}");
    } else {
        println!("{summary}");
    }
    Ok(())
}

fn cmd_color(input: &str, mode: Mode, output: Option<PathBuf>) -> Result<(), CliError> {
    let h = parse_hypergraph_input(input)?;
    let (coloring, bound) = match mode {
        Mode::Auto => {
            let run = color_auto(&h)?;
            let bound = if run.used_k_route { run.params.k } else { run.params.k + 1 };
            (run.coloring, bound)
        }
        Mode::K => {
            let c = color_k(&h)?;
            let k = Parameters::for_hypergraph(&h).k;
            (c, k)
        }
        Mode::K1 => {
            let c = color_k_plus_1(&h)?;
            (c, Parameters::for_hypergraph(&h).k + 1)
        }
    };
    emit_coloring_and_summary(coloring_target(input, output), &coloring, bound)
}

fn cmd_dynamic(input: &str, output: Option<PathBuf>) -> Result<(), CliError> {
    let g = parse_graph_input(input)?;
    let run = dynamic_color_run(&g).map_err(|e| CliError::Internal(e.to_string()))?;
    let bound = if run.within_k { run.k } else { run.k + 1 };
    emit_coloring_and_summary(coloring_target(input, output), &run.coloring, bound)
}

fn cmd_verify(
    instance_path: &str,
    coloring_path: &str,
    kind: Option<VerifyKind>,
) -> Result<(), CliError> {
    let instance = parse_instance(&read_input(instance_path)?)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let coloring =
        parse_coloring(&read_input(coloring_path)?).map_err(|e| CliError::Usage(e.to_string()))?;
    let kind = kind.unwrap_or(match &instance {
        Instance::Hypergraph(_) => VerifyKind::Hyper,
        Instance::Graph(_) => VerifyKind::Graph,
    });
    let report = match (kind, &instance) {
        (VerifyKind::Hyper, Instance::Hypergraph(h)) => verify_proper_hypergraph(h, &coloring),
        (VerifyKind::Graph, Instance::Graph(g)) => verify_proper_graph(g, &coloring),
        (VerifyKind::Dynamic, Instance::Graph(g)) => verify_dynamic(g, &coloring),
        (VerifyKind::Hyper, Instance::Graph(_)) => {
            return Err(CliError::Usage(
                "--kind hyper needs a hypergraph instance".to_string(),
            ))
        }
        (_, Instance::Hypergraph(_)) => {
            return Err(CliError::Usage(
                "--kind graph/dynamic needs a graph instance".to_string(),
            ))
        }
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;
    if report.ok() {
        Ok(())
    } else {
        for violation in &report.violations {
            eprintln!("violation: {violation:?}");
        }
        Err(CliError::Verification)
    }
}

fn cmd_gen(
    kind: GenKind,
    params: &[String],
    seed: u64,
    output: Option<PathBuf>,
) -> Result<(), CliError> {
    let text = match kind {
        GenKind::Hyper => {
            let map = param_map(params, &["n", "m", "sizes", "cap"])?;
            let n: usize = parse_num(map.get("n").ok_or_else(missing("n"))?, "n")?;
            let m: usize = parse_num(map.get("m").ok_or_else(missing("m"))?, "m")?;
            let (size_lo, size_hi) = match map.get("sizes") {
                Some(v) => parse_range(v, "sizes")?,
                None => (2.min(n), 4.min(n)),
            };
            let max_degree_cap = map.get("cap").map(|v| parse_num(v, "cap")).transpose()?;
            let p = GenParams { n, m, size_lo, size_hi, max_degree_cap, seed };
            let h = random_hypergraph(&p).map_err(|e| CliError::Usage(e.to_string()))?;
            write_hypergraph(&h)
        }
        GenKind::Graph => {
            let map = param_map(params, &["n", "p"])?;
            let n: usize = parse_num(map.get("n").ok_or_else(missing("n"))?, "n")?;
            let (num, den) = match map.get("p") {
                Some(v) => {
                    let (num, den) = v
                        .split_once('/')
                        .ok_or_else(|| CliError::Usage(format!("p must be NUM/DEN, got '{v}'")))?;
                    (parse_num(num, "p numerator")?, parse_num(den, "p denominator")?)
                }
                None => (1, 2),
            };
            let g = random_graph(n, num, den, seed).map_err(|e| CliError::Usage(e.to_string()))?;
            write_graph(&g)
        }
    };
    write_output(output.as_deref(), &text)?;
    Ok(())
}

fn missing(key: &'static str) -> impl Fn() -> CliError {
    move || CliError::Usage(format!("missing required parameter '{key}='"))
}

fn cmd_bench(count: usize, seed: u64, params: &[String]) -> Result<(), CliError> {
    let map = param_map(params, &["n", "m", "sizes", "cap"])?;
    let (n_lo, n_hi) = match map.get("n") {
        Some(v) => parse_range(v, "n")?,
        None => (6, 14),
    };
    let (m_lo, m_hi) = match map.get("m") {
        Some(v) => parse_range(v, "m")?,
        None => (4, 20),
    };
    let (size_lo, size_hi) = match map.get("sizes") {
        Some(v) => parse_range(v, "sizes")?,
        None => (3, 5),
    };
    let cap: Option<usize> = map.get("cap").map(|v| parse_num(v, "cap")).transpose()?;

    println!("instance_id,n,m,delta,Delta,k,colors_used,rotations,verified");
    let mut meta = SplitMix64::new(seed);
    let mut id = 0;
    let mut attempts = 0;
    while id < count {
        attempts += 1;
        if attempts > 100 * count.max(1) {
            return Err(CliError::Usage(
                "generation keeps failing; loosen the ranges or the cap".to_string(),
            ));
        }
        let n = meta.range(n_lo, n_hi);
        let m = meta.range(m_lo, m_hi);
        let p = GenParams {
            n,
            m,
            size_lo: size_lo.min(n),
            size_hi: size_hi.min(n),
            max_degree_cap: cap,
            seed: meta.next_u64(),
        };
        let Ok(h) = random_hypergraph(&p) else { continue };
        let stats = h.stats();
        let run = color_auto(&h)?;
        let verified = verify_proper_hypergraph(&h, &run.coloring)
            .map(|r| r.ok())
            .unwrap_or(false);
        println!(
            "{id},{n},{m},{delta},{big_delta},{k},{used},{rotations},{verified}",
            delta = stats.min_edge_size.unwrap_or(0),
            big_delta = stats.max_degree,
            k = run.params.k,
            used = run.coloring.colors_used(),
            rotations = run.rotations,
        );
        id += 1;
    }
    Ok(())
}
