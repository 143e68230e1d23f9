//! Argument parsing and dispatch for the `dawn` binary.
//!
//! Exit codes: 0 success, 1 runtime error, 2 usage error, 3 negative cycle
//! detected without `--allow-negative-cycles`.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::experiment::{
    run_benchmark, write_report, BenchAlgorithm, BenchConfig, MuExperiment, ReportFormat, Task,
    DEFAULT_MU_SOURCES,
};
use crate::graph::{
    apply_weight_mode, build_csr, load_edge_list, load_matrix_market, write_edge_list,
    write_matrix_market, CsrGraph, Edge, WeightMode,
};
use crate::oracle::{bellman_ford_sssp, dijkstra_sssp, floyd_warshall_apsp, DEFAULT_FLOYD_CAP};
use crate::solver::{apsp, mssp, AggregateStats, DistanceVector, SolveStats};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NEGATIVE_CYCLE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Sssp,
    Mssp,
    Apsp,
    Mu,
    Bench,
    Convert,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    EdgeList,
    Mtx,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Rows,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceSpec {
    Explicit(Vec<usize>),
    /// Sample this many sources with the run seed.
    Count(usize),
    All,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WeightSpec {
    Keep,
    Unit,
    Random { lo: f64, hi: f64 },
}

impl WeightSpec {
    pub fn mode(self, seed: u64) -> WeightMode {
        match self {
            WeightSpec::Keep => WeightMode::Keep,
            WeightSpec::Unit => WeightMode::Unit,
            WeightSpec::Random { lo, hi } => WeightMode::RandomUniform { lo, hi, seed },
        }
    }
}

/// Fully validated invocation.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub input_format: InputFormat,
    pub directed: bool,
    pub algorithm: BenchAlgorithm,
    pub sources: Option<SourceSpec>,
    pub weights: WeightSpec,
    pub workers: usize,
    pub output: Option<PathBuf>,
    pub output_format: OutputFormat,
    pub seed: u64,
    pub floyd_cap: usize,
    pub allow_negative_cycles: bool,
    pub repeats: usize,
}

#[derive(Debug)]
pub enum CliError {
    /// Help or version text; exit 0.
    Display(String),
    Usage(String),
}

#[derive(Parser, Debug)]
#[command(name = "dawn", version, about = "Weighted DAWN shortest paths over CSR graphs")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Distances from one source
    Sssp(Flags),
    /// Distances from several sources
    Mssp(Flags),
    /// Distances from every node, streamed row by row
    Apsp(Flags),
    /// Unit-weight vs random-weight path-update experiment
    Mu(Flags),
    /// Time an algorithm on a graph
    Bench(Flags),
    /// Convert between edge-list and MatrixMarket
    Convert(Flags),
}

#[derive(Args, Debug)]
struct Flags {
    #[arg(short, long)]
    input: Option<PathBuf>,
    /// edgelist | mtx (default: from the file extension)
    #[arg(long)]
    format: Option<String>,
    #[arg(long, conflicts_with = "undirected")]
    directed: bool,
    #[arg(long)]
    undirected: bool,
    /// govm | gsvm | dijkstra | bellman-ford | floyd
    #[arg(short, long)]
    algorithm: Option<String>,
    /// Explicit source; may be repeated
    #[arg(long)]
    source: Vec<usize>,
    /// Comma-separated list, a count to sample, or `all`
    #[arg(long)]
    sources: Option<String>,
    /// keep | unit | random:LO:HI
    #[arg(long, default_value = "keep")]
    weights: String,
    #[arg(long, env = "DAWN_WORKERS")]
    workers: Option<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// csv | json | rows
    #[arg(long)]
    output_format: Option<String>,
    #[arg(long, env = "DAWN_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_FLOYD_CAP)]
    floyd_cap: usize,
    #[arg(long)]
    allow_negative_cycles: bool,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn parse_sources(text: &str) -> Result<SourceSpec, CliError> {
    let text = text.trim();
    if text.eq_ignore_ascii_case("all") {
        return Ok(SourceSpec::All);
    }
    if text.contains(',') {
        let ids = text
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| usage(format!("--sources: invalid list `{text}`")))?;
        return Ok(SourceSpec::Explicit(ids));
    }
    text.parse::<usize>()
        .map(SourceSpec::Count)
        .map_err(|_| usage(format!("--sources: expected a list, a count or `all`, got `{text}`")))
}

fn parse_weights(text: &str) -> Result<WeightSpec, CliError> {
    match text {
        "keep" => return Ok(WeightSpec::Keep),
        "unit" => return Ok(WeightSpec::Unit),
        _ => {}
    }
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() == 3 && parts[0] == "random" {
        let lo: f64 = parts[1].parse().map_err(|_| usage(format!("--weights: bad bound `{}`", parts[1])))?;
        let hi: f64 = parts[2].parse().map_err(|_| usage(format!("--weights: bad bound `{}`", parts[2])))?;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(usage(format!("--weights: empty range [{lo}, {hi})")));
        }
        return Ok(WeightSpec::Random { lo, hi });
    }
    Err(usage(format!("--weights: expected keep, unit or random:LO:HI, got `{text}`")))
}

fn extension(path: &Path) -> Option<String> {
    path.extension().map(|e| e.to_string_lossy().to_ascii_lowercase())
}

pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp
        | clap::error::ErrorKind::DisplayVersion
        | clap::error::ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            CliError::Display(e.to_string())
        }
        _ => CliError::Usage(e.to_string()),
    })?;
    let (command, f) = match cli.command {
        Sub::Sssp(f) => (Command::Sssp, f),
        Sub::Mssp(f) => (Command::Mssp, f),
        Sub::Apsp(f) => (Command::Apsp, f),
        Sub::Mu(f) => (Command::Mu, f),
        Sub::Bench(f) => (Command::Bench, f),
        Sub::Convert(f) => (Command::Convert, f),
    };

    let input = f.input.ok_or_else(|| usage("missing required --input"))?;
    let input_format = match f.format.as_deref() {
        Some("edgelist") | Some("txt") => InputFormat::EdgeList,
        Some("mtx") => InputFormat::Mtx,
        Some(other) => return Err(usage(format!("--format: unknown input format `{other}`"))),
        None if extension(&input).as_deref() == Some("mtx") => InputFormat::Mtx,
        None => InputFormat::EdgeList,
    };

    let algorithm = match f.algorithm.as_deref() {
        None => BenchAlgorithm::Govm,
        Some(a) => a.parse().map_err(|e: String| usage(format!("--algorithm: {e}")))?,
    };
    let weights = parse_weights(&f.weights)?;
    if algorithm == BenchAlgorithm::Dijkstra {
        if let WeightSpec::Random { lo, .. } = weights {
            if lo < 0.0 {
                return Err(usage("--algorithm dijkstra cannot be combined with negative --weights"));
            }
        }
    }

    let mut sources = match f.sources.as_deref() {
        Some(text) => Some(parse_sources(text)?),
        None => None,
    };
    if !f.source.is_empty() {
        if sources.is_some() {
            return Err(usage("--source and --sources are mutually exclusive"));
        }
        sources = Some(SourceSpec::Explicit(f.source.clone()));
    }
    match command {
        Command::Sssp => match &sources {
            Some(SourceSpec::Explicit(v)) if v.len() == 1 => {}
            _ => return Err(usage("sssp requires exactly one --source")),
        },
        Command::Mssp | Command::Bench => {
            if sources.is_none() {
                return Err(usage(format!("{command:?} requires --source or --sources").to_lowercase()));
            }
        }
        Command::Apsp => match sources {
            None | Some(SourceSpec::All) => sources = Some(SourceSpec::All),
            _ => return Err(usage("apsp always runs from every node; drop --source/--sources")),
        },
        Command::Mu => {
            if matches!(sources, Some(SourceSpec::Explicit(_)) | Some(SourceSpec::All)) {
                return Err(usage("mu takes a source count: --sources N"));
            }
            if algorithm != BenchAlgorithm::Govm {
                return Err(usage("mu always runs govm"));
            }
            if weights != WeightSpec::Keep {
                return Err(usage("mu sets its own weights; drop --weights"));
            }
        }
        Command::Convert => {}
    }
    if let Some(SourceSpec::Explicit(v)) = &sources {
        if v.is_empty() {
            return Err(usage("--sources: empty list"));
        }
    }
    if let Some(SourceSpec::Count(0)) = sources {
        return Err(usage("--sources: count must be at least 1"));
    }

    let workers = match f.workers {
        Some(0) => return Err(usage("--workers must be at least 1")),
        Some(w) => w,
        None => std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
    };
    if f.repeats < crate::experiment::MIN_REPEATS {
        return Err(usage(format!("--repeats must be at least {}", crate::experiment::MIN_REPEATS)));
    }

    let report_command = matches!(command, Command::Mu | Command::Bench);
    let output_format = match f.output_format.as_deref() {
        Some("csv") => OutputFormat::Csv,
        Some("json") => OutputFormat::Json,
        Some("rows") if !report_command => OutputFormat::Rows,
        Some("rows") => return Err(usage("--output-format rows only applies to distance output")),
        Some(other) => return Err(usage(format!("--output-format: unknown format `{other}`"))),
        None => match f.output.as_deref().and_then(extension).as_deref() {
            Some("json") => OutputFormat::Json,
            Some("csv") => OutputFormat::Csv,
            _ if report_command => OutputFormat::Csv,
            _ => OutputFormat::Rows,
        },
    };
    if command == Command::Convert && f.output.is_none() {
        return Err(usage("convert requires --output"));
    }

    Ok(RunConfig {
        command,
        input,
        input_format,
        directed: !f.undirected,
        algorithm,
        sources,
        weights,
        workers,
        output: f.output,
        output_format,
        seed: f.seed,
        floyd_cap: f.floyd_cap,
        allow_negative_cycles: f.allow_negative_cycles,
        repeats: f.repeats,
    })
}

fn load_graph(cfg: &RunConfig) -> Result<CsrGraph, String> {
    let file = File::open(&cfg.input).map_err(|e| format!("{}: {e}", cfg.input.display()))?;
    let reader = BufReader::new(file);
    let mut el = match cfg.input_format {
        InputFormat::EdgeList => load_edge_list(reader, cfg.directed),
        InputFormat::Mtx => load_matrix_market(reader),
    }
    .map_err(|e| format!("{}: {e}", cfg.input.display()))?;
    if cfg.input_format == InputFormat::Mtx && !cfg.directed {
        let reversed: Vec<Edge> =
            el.edges.iter().filter(|e| e.u != e.v).map(|e| Edge::new(e.v, e.u, e.w)).collect();
        el.edges.extend(reversed);
    }
    let g = build_csr(&el).map_err(|e| e.to_string())?;
    apply_weight_mode(&g, cfg.weights.mode(cfg.seed)).map_err(|e| e.to_string())
}

fn graph_id(cfg: &RunConfig) -> String {
    cfg.input.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

fn resolve_sources(spec: &SourceSpec, n: usize, seed: u64) -> Result<Vec<usize>, String> {
    match spec {
        SourceSpec::Explicit(v) => {
            if let Some(&s) = v.iter().find(|&&s| s >= n) {
                return Err(format!("source {s} is out of range for a graph with {n} nodes"));
            }
            Ok(v.clone())
        }
        SourceSpec::Count(k) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut v = sample(&mut rng, n, (*k).min(n)).into_vec();
            v.sort_unstable();
            Ok(v)
        }
        SourceSpec::All => Ok((0..n).collect()),
    }
}

enum Outcome {
    Done,
    NegativeCycle,
}

/// Streams distance rows in the configured format.
struct RowWriter<'a> {
    out: &'a mut dyn Write,
    format: OutputFormat,
    rows: usize,
}

impl<'a> RowWriter<'a> {
    fn new(out: &'a mut dyn Write, format: OutputFormat, n: usize) -> io::Result<Self> {
        match format {
            OutputFormat::Csv => {
                let mut header = String::from("source");
                for j in 0..n {
                    header.push_str(&format!(",d{j}"));
                }
                writeln!(out, "{header}")?;
            }
            OutputFormat::Json => write!(out, "[")?,
            OutputFormat::Rows => {}
        }
        Ok(Self { out, format, rows: 0 })
    }

    fn row(&mut self, d: &DistanceVector) -> io::Result<()> {
        match self.format {
            OutputFormat::Rows | OutputFormat::Csv => writeln!(self.out, "{}", d.to_row())?,
            OutputFormat::Json => {
                let dist: Vec<Option<f64>> =
                    d.as_slice().iter().map(|&x| x.is_finite().then_some(x)).collect();
                let obj = serde_json::json!({ "source": d.source(), "dist": dist });
                let sep = if self.rows == 0 { "\n  " } else { ",\n  " };
                write!(self.out, "{sep}{obj}")?;
            }
        }
        self.rows += 1;
        Ok(())
    }

    fn finish(self) -> io::Result<()> {
        if self.format == OutputFormat::Json {
            writeln!(self.out, "\n]")?;
        }
        self.out.flush()
    }
}

fn stats_line(agg: &AggregateStats) -> String {
    format!(
        "sources={} relaxations={} writes={} first_discoveries={} re_updates={} mean_mu={} mean_updated_ratio={} negative_cycles={}",
        agg.sources,
        agg.relaxations,
        agg.writes,
        agg.first_discoveries,
        agg.re_updates,
        agg.mean_mu,
        agg.mean_updated_ratio,
        agg.negative_cycles
    )
}

fn solve_command(
    cfg: &RunConfig,
    g: &CsrGraph,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<Outcome, String> {
    let spec = cfg.sources.as_ref().expect("validated");
    let sources = resolve_sources(spec, g.n(), cfg.seed)?;
    let io_err = |e: io::Error| e.to_string();
    let mut rows = RowWriter::new(out, cfg.output_format, g.n()).map_err(io_err)?;
    let mut negative = false;

    match cfg.algorithm {
        BenchAlgorithm::Govm | BenchAlgorithm::Gsvm => {
            let algo = match cfg.algorithm {
                BenchAlgorithm::Gsvm => crate::solver::Algorithm::Gsvm,
                _ => crate::solver::Algorithm::Govm,
            };
            let agg = if *spec == SourceSpec::All {
                apsp(g, algo, cfg.workers, |d| rows.row(d)).map_err(|e| e.to_string())?
            } else {
                let sols = mssp(g, &sources, algo, cfg.workers).map_err(|e| e.to_string())?;
                for s in &sols {
                    rows.row(&s.dist).map_err(io_err)?;
                }
                let stats: Vec<SolveStats> = sols.iter().map(|s| s.stats).collect();
                AggregateStats::from_stats(&stats)
            };
            negative = agg.negative_cycles > 0;
            writeln!(err, "stats: {}", stats_line(&agg)).ok();
        }
        BenchAlgorithm::Dijkstra | BenchAlgorithm::BellmanFord => {
            let f = if cfg.algorithm == BenchAlgorithm::Dijkstra { dijkstra_sssp } else { bellman_ford_sssp };
            for &s in &sources {
                let r = f(g, s).map_err(|e| e.to_string())?;
                negative |= r.negative_cycle;
                rows.row(&r.dist).map_err(io_err)?;
            }
        }
        BenchAlgorithm::Floyd => {
            let fw = floyd_warshall_apsp(g, cfg.floyd_cap).map_err(|e| e.to_string())?;
            negative = fw.negative_cycle;
            for &s in &sources {
                rows.row(&DistanceVector::new(s, fw.row(s).to_vec())).map_err(io_err)?;
            }
        }
    }
    rows.finish().map_err(io_err)?;
    Ok(if negative { Outcome::NegativeCycle } else { Outcome::Done })
}

fn report_format(f: OutputFormat) -> ReportFormat {
    match f {
        OutputFormat::Json => ReportFormat::Json,
        _ => ReportFormat::Csv,
    }
}

fn execute(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> Result<Outcome, String> {
    let g = load_graph(cfg)?;
    match cfg.command {
        Command::Sssp | Command::Mssp | Command::Apsp => solve_command(cfg, &g, out, err),
        Command::Mu => {
            let k = match cfg.sources {
                Some(SourceSpec::Count(k)) => k,
                _ => DEFAULT_MU_SOURCES.min(g.n()).max(1),
            };
            let mut exp = MuExperiment::new(graph_id(cfg), k, cfg.seed).workers(cfg.workers);
            exp.directed = Some(cfg.directed);
            let report = exp.run(&g).map_err(|e| e.to_string())?;
            if let Some(note) = &report.note {
                writeln!(err, "note: {note}").ok();
            }
            write_report(&[report], report_format(cfg.output_format), out).map_err(|e| e.to_string())?;
            Ok(Outcome::Done)
        }
        Command::Bench => {
            let spec = cfg.sources.as_ref().expect("validated");
            let sources = resolve_sources(spec, g.n(), cfg.seed)?;
            let task = match spec {
                SourceSpec::All => Task::Apsp,
                _ if sources.len() == 1 => Task::Sssp,
                _ => Task::Mssp,
            };
            let bc = BenchConfig {
                graph_id: graph_id(cfg),
                algorithm: cfg.algorithm,
                task,
                sources,
                workers: cfg.workers,
                repeats: cfg.repeats,
                floyd_cap: cfg.floyd_cap,
            };
            let rec = run_benchmark(&g, &bc).map_err(|e| e.to_string())?;
            write_report(&[rec], report_format(cfg.output_format), out).map_err(|e| e.to_string())?;
            Ok(Outcome::Done)
        }
        Command::Convert => {
            let path = cfg.output.as_ref().expect("validated");
            let result = if extension(path).as_deref() == Some("mtx") {
                write_matrix_market(&g, out)
            } else {
                write_edge_list(&g, out)
            };
            result.map_err(|e| e.to_string())?;
            Ok(Outcome::Done)
        }
    }
}

/// Runs a validated configuration, writing results to `--output` or
/// `stdout` and diagnostics to `stderr`. Returns the process exit code.
pub fn run(cfg: &RunConfig, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let result = match &cfg.output {
        Some(path) => match File::create(path) {
            Ok(file) => {
                let mut w = BufWriter::new(file);
                let r = execute(cfg, &mut w, stderr);
                match w.flush() {
                    Ok(()) => r,
                    Err(e) => Err(e.to_string()),
                }
            }
            Err(e) => Err(format!("{}: {e}", path.display())),
        },
        None => execute(cfg, stdout, stderr),
    };
    match result {
        Ok(Outcome::Done) => EXIT_OK,
        Ok(Outcome::NegativeCycle) if cfg.allow_negative_cycles => {
            writeln!(stderr, "warning: negative cycle detected; distances are unreliable").ok();
            EXIT_OK
        }
        Ok(Outcome::NegativeCycle) => {
            writeln!(
                stderr,
                "error: negative cycle reachable from a source; distances are unreliable \
                 (pass --allow-negative-cycles to accept them)"
            )
            .ok();
            EXIT_NEGATIVE_CYCLE
        }
        Err(msg) => {
            writeln!(stderr, "error: {msg}").ok();
            EXIT_RUNTIME
        }
    }
}

/// Parses `argv`, runs it and returns the exit code.
pub fn main_with_args<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv) {
        Ok(cfg) => run(&cfg, stdout, stderr),
        Err(CliError::Display(text)) => {
            write!(stdout, "{text}").ok();
            EXIT_OK
        }
        Err(CliError::Usage(msg)) => {
            write!(stderr, "{msg}").ok();
            if !msg.ends_with('\n') {
                writeln!(stderr).ok();
            }
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &str) -> Result<RunConfig, CliError> {
        parse_args(std::iter::once("dawn").chain(args.split_whitespace()))
    }

    #[test]
    fn sssp_defaults() {
        let cfg = parse("sssp -i g.mtx --source 0").unwrap();
        assert_eq!(cfg.command, Command::Sssp);
        assert_eq!(cfg.algorithm, BenchAlgorithm::Govm);
        assert_eq!(cfg.sources, Some(SourceSpec::Explicit(vec![0])));
        assert_eq!(cfg.input_format, InputFormat::Mtx);
        assert!(cfg.directed);
        assert_eq!(cfg.output_format, OutputFormat::Rows);
        assert!(cfg.workers >= 1);
    }

    #[test]
    fn mu_config() {
        let cfg = parse("mu -i g.txt --sources 64 --seed 7").unwrap();
        assert_eq!(cfg.command, Command::Mu);
        assert_eq!(cfg.sources, Some(SourceSpec::Count(64)));
        assert_eq!(cfg.seed, 7);
        assert_eq!(cfg.input_format, InputFormat::EdgeList);
        assert_eq!(cfg.output_format, OutputFormat::Csv);
    }

    #[test]
    fn usage_errors() {
        for args in [
            "sssp",
            "sssp -i g.txt",
            "sssp -i g.txt --source 0 --source 1",
            "mssp -i g.txt",
            "sssp -i g.txt --source 0 --bogus",
            "sssp -i g.txt --source 0 -a dijkstra --weights random:-1:1",
            "sssp -i g.txt --source 0 --weights random:2:1",
            "sssp -i g.txt --source 0 --workers 0",
            "apsp -i g.txt --source 3",
            "mu -i g.txt --sources 1,2",
            "mu -i g.txt -o r.csv --output-format rows",
            "convert -i g.txt",
            "bench -i g.txt --sources 4 --repeats 2",
            "sssp -i g.txt --directed --undirected --source 0",
        ] {
            assert!(matches!(parse(args), Err(CliError::Usage(_))), "{args}");
        }
        assert!(matches!(parse("--help"), Err(CliError::Display(_))));
    }

    #[test]
    fn source_specs() {
        assert_eq!(parse_sources("all").unwrap(), SourceSpec::All);
        assert_eq!(parse_sources("1,2,5").unwrap(), SourceSpec::Explicit(vec![1, 2, 5]));
        assert_eq!(parse_sources("4,").unwrap(), SourceSpec::Explicit(vec![4]));
        assert_eq!(parse_sources("12").unwrap(), SourceSpec::Count(12));
        assert!(parse_sources("x").is_err());
        let cfg = parse("mssp -i g.txt --sources all").unwrap();
        assert_eq!(cfg.sources, Some(SourceSpec::All));
        let cfg = parse("apsp -i g.txt").unwrap();
        assert_eq!(cfg.sources, Some(SourceSpec::All));
    }

    #[test]
    fn weights_and_formats() {
        let cfg = parse("mssp -i g.txt --sources 0,1 --weights random:0:2 -o out.json").unwrap();
        assert_eq!(cfg.weights, WeightSpec::Random { lo: 0.0, hi: 2.0 });
        assert_eq!(cfg.output_format, OutputFormat::Json);
        let cfg = parse("sssp -i g.txt --source 0 --undirected --format mtx -a bellman-ford").unwrap();
        assert!(!cfg.directed);
        assert_eq!(cfg.input_format, InputFormat::Mtx);
        assert_eq!(cfg.algorithm, BenchAlgorithm::BellmanFord);
    }

    #[test]
    fn sampled_sources_are_deterministic() {
        let a = resolve_sources(&SourceSpec::Count(5), 100, 3).unwrap();
        let b = resolve_sources(&SourceSpec::Count(5), 100, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 5);
        assert_eq!(resolve_sources(&SourceSpec::Count(50), 4, 3).unwrap(), vec![0, 1, 2, 3]);
        assert!(resolve_sources(&SourceSpec::Explicit(vec![4]), 4, 0).is_err());
    }

    #[test]
    fn distance_formats() {
        let d = DistanceVector::new(0, vec![0.0, 1.5, f64::INFINITY]);
        let mut buf = Vec::new();
        let mut w = RowWriter::new(&mut buf, OutputFormat::Json, 3).unwrap();
        w.row(&d).unwrap();
        w.finish().unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v[0]["dist"], serde_json::json!([0.0, 1.5, null]));

        let mut buf = Vec::new();
        let mut w = RowWriter::new(&mut buf, OutputFormat::Csv, 3).unwrap();
        w.row(&d).unwrap();
        w.finish().unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "source,d0,d1,d2\n0,0,1.5,inf\n");
    }
}
