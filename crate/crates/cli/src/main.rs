//! `antidim`: analysis, hardening, generation and experiment front end.
//!
//! Machine-readable output goes to stdout (or `--out`); logs go to stderr.
//! Exit codes: 0 success, 2 input error, 3 budget exceeded.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use antidim::antiresolve::DEFAULT_ORACLE_LIMIT;
use antidim::enumerate::{enumerate_connected, enumerate_connected_extended, enumerate_trees};
use antidim::experiments::{
    audit_network, classify_stream, sweep, write_audit_csv, write_classification_csv,
    write_json_line, write_sweep_csv, ClassifyOptions, AUDIT_BUDGET,
};
use antidim::families;
use antidim::ingest::{
    parse_edge_list, parse_graph6, read_graph6_stream, write_graph6, EdgeListOptions, LabeledGraph,
};
use antidim::products::harden;
use antidim::randgen::{Model, RandomModelConfig};
use antidim::{adim_oracle, analyze, EffortPolicy, Error, Graph};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "antidim", version, about = "k-metric antidimension toolkit")]
struct Cli {
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for sweep and classify (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Wall-clock budget in seconds.
    #[arg(long, global = true)]
    budget: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether Adim(G) = 1 and report bounds.
    Analyze {
        #[command(flatten)]
        input: GraphInput,
        /// Also run the exhaustive oracle up to this order.
        #[arg(long, default_value_t = 0)]
        oracle_limit: usize,
    },
    /// Exact Adim and adim_k table by exhaustive search.
    Oracle {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
    /// Rank product embeddings that raise the antidimension.
    Harden {
        #[command(flatten)]
        input: GraphInput,
        /// Catalog factor as NAME or NAME:PARAM (repeatable).
        #[arg(long = "factor")]
        factors: Vec<String>,
    },
    /// Print a named family member as graph6.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        param: Option<usize>,
    },
    /// Print every connected graph (or free tree) of an order as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trees: bool,
        /// Raise the order cap from 8 to 9.
        #[arg(long)]
        extended: bool,
    },
    /// Random-model sweep.
    Sweep(SweepArgs),
    /// Exhaustive classification table.
    Classify {
        /// Classify the built-in enumeration of this order; otherwise read
        /// graph6 lines from stdin.
        #[arg(long)]
        enumerate: Option<usize>,
        #[arg(long)]
        extended: bool,
        /// Add the per-density breakdown.
        #[arg(long)]
        density: bool,
    },
    /// Header statistics and verdict for edge-list networks.
    Audit {
        /// Edge-list files (repeatable).
        #[arg(long = "edges", required = true)]
        edges: Vec<PathBuf>,
        #[command(flatten)]
        opts: EdgeOpts,
    },
    /// Convert between graph6 and edge lists.
    Convert {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum)]
        to: ConvertTarget,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvertTarget {
    Graph6,
    Edges,
}

#[derive(Args)]
struct GraphInput {
    #[arg(long, conflicts_with_all = ["edges", "name"])]
    graph6: Option<String>,
    #[arg(long, conflicts_with = "name")]
    edges: Option<PathBuf>,
    /// Family name (see `family`).
    #[arg(long)]
    name: Option<String>,
    #[arg(long, requires = "name")]
    param: Option<usize>,
    #[command(flatten)]
    opts: EdgeOpts,
}

#[derive(Args, Clone, Copy)]
struct EdgeOpts {
    /// Require integer labels.
    #[arg(long)]
    numeric: bool,
    /// Treat commas as separators.
    #[arg(long)]
    commas: bool,
    /// Read only the first two columns of each line.
    #[arg(long)]
    first_two: bool,
    /// Skip the first non-comment line.
    #[arg(long)]
    header: bool,
}

impl EdgeOpts {
    fn options(self) -> EdgeListOptions {
        EdgeListOptions {
            numeric: self.numeric,
            commas: self.commas,
            first_two_columns: self.first_two,
            skip_header: self.header,
            ..Default::default()
        }
    }
}

#[derive(Args)]
struct SweepArgs {
    /// JSON manifest: one config object or an array of them.
    #[arg(long, conflicts_with_all = ["model", "n"])]
    manifest: Option<PathBuf>,
    #[arg(long, value_enum, requires = "n")]
    model: Option<ModelArg>,
    #[arg(long)]
    n: Option<usize>,
    /// Sweep every order from --n to --n-max.
    #[arg(long, requires = "n")]
    n_max: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    /// Use p = (1 + eps) ln n / n for each order.
    #[arg(long, conflicts_with = "p")]
    threshold_eps: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1000)]
    samples: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Ba,
    Gnm,
    Gnp,
}

enum Failure {
    Input(Error),
    Budget,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Input(e.into())
    }
}

type CliResult = Result<(), Failure>;

fn open_out(path: &Option<PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(io::BufWriter::new(File::create(p)?)),
        None => Box::new(io::BufWriter::new(io::stdout().lock())),
    })
}

fn read_graph(input: &GraphInput) -> Result<LabeledGraph, Error> {
    if let Some(s) = &input.graph6 {
        return Ok(LabeledGraph::unlabeled(parse_graph6(s.trim().as_bytes())?));
    }
    if let Some(path) = &input.edges {
        let file = BufReader::new(File::open(path)?);
        return parse_edge_list(file, &input.opts.options());
    }
    if let Some(name) = &input.name {
        return Ok(LabeledGraph::unlabeled(families::by_name(name, input.param)?));
    }
    let mut text = String::new();
    io::stdin().read_to_string(&mut text)?;
    let line = text.lines().find(|l| !l.trim().is_empty()).ok_or(Error::BadHeader)?;
    Ok(LabeledGraph::unlabeled(parse_graph6(line.trim().as_bytes())?))
}

fn write_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Error> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")?;
    Ok(())
}

fn budget(cli: &Cli) -> Option<Duration> {
    cli.budget.map(Duration::from_secs_f64)
}

fn cmd_analyze(cli: &Cli, input: &GraphInput, oracle_limit: usize) -> CliResult {
    let g = read_graph(input)?;
    let mut policy = EffortPolicy::default().with_oracle(oracle_limit);
    policy.time_limit = budget(cli);
    let mut out = open_out(&cli.out)?;
    match analyze(&g.graph, &policy) {
        Ok(report) => write_json(&mut out, &report)?,
        Err(Error::BudgetExceeded { partial, limit }) => {
            log::warn!("budget of {limit:?} exceeded; emitting bounds only");
            write_json(&mut out, &partial)?;
            out.flush()?;
            return Err(Failure::Budget);
        }
        Err(e) => return Err(e.into()),
    }
    out.flush()?;
    Ok(())
}

fn cmd_oracle(cli: &Cli, input: &GraphInput, limit: usize) -> CliResult {
    let g = read_graph(input)?;
    let mut out = open_out(&cli.out)?;
    match adim_oracle(&g.graph, limit) {
        Ok(table) => write_json(&mut out, &table)?,
        Err(Error::TooLarge { order, limit }) => {
            log::warn!("order {order} exceeds the oracle limit {limit}; emitting bounds only");
            let policy = EffortPolicy { time_limit: budget(cli), ..Default::default() };
            let partial = match analyze(&g.graph, &policy) {
                Ok(r) => r,
                Err(Error::BudgetExceeded { partial, .. }) => *partial,
                Err(e) => return Err(e.into()),
            };
            write_json(&mut out, &partial)?;
            out.flush()?;
            return Err(Failure::Budget);
        }
        Err(e) => return Err(e.into()),
    }
    out.flush()?;
    Ok(())
}

fn parse_factor(spec: &str) -> Result<(String, Graph), Error> {
    let (name, param) = match spec.split_once(':') {
        Some((n, p)) => {
            let p = p
                .parse()
                .map_err(|_| Error::InvalidParameter(format!("bad factor parameter in {spec}")))?;
            (n, Some(p))
        }
        None => (spec, None),
    };
    Ok((spec.to_string(), families::by_name(name, param)?))
}

fn cmd_harden(cli: &Cli, input: &GraphInput, factors: &[String]) -> CliResult {
    let g = read_graph(input)?;
    let defaults = ["path:2", "path:3", "complete:3", "cycle:4"];
    let specs: Vec<&str> = if factors.is_empty() {
        defaults.to_vec()
    } else {
        factors.iter().map(String::as_str).collect()
    };
    let catalog = specs.into_iter().map(parse_factor).collect::<Result<Vec<_>, _>>()?;
    let advice = harden(&g.graph, &catalog)?;
    let mut out = open_out(&cli.out)?;
    write_json(&mut out, &advice)?;
    out.flush()?;
    Ok(())
}

fn cmd_family(cli: &Cli, name: &str, param: Option<usize>) -> CliResult {
    let g = families::by_name(name, param)?;
    let mut out = open_out(&cli.out)?;
    writeln!(out, "{}", write_graph6(&g))?;
    out.flush()?;
    Ok(())
}

fn cmd_enumerate(cli: &Cli, n: usize, trees: bool, extended: bool) -> CliResult {
    let graphs = if trees {
        enumerate_trees(n)?
    } else if extended {
        enumerate_connected_extended(n)?
    } else {
        enumerate_connected(n)?
    };
    log::info!("{} graphs of order {n}", graphs.len());
    let mut out = open_out(&cli.out)?;
    for g in &graphs {
        writeln!(out, "{}", write_graph6(g))?;
    }
    out.flush()?;
    Ok(())
}

fn sweep_configs(args: &SweepArgs) -> Result<Vec<RandomModelConfig>, Error> {
    if let Some(path) = &args.manifest {
        let value: serde_json::Value = serde_json::from_reader(BufReader::new(File::open(path)?))?;
        return Ok(match value {
            serde_json::Value::Array(items) => items
                .into_iter()
                .map(serde_json::from_value)
                .collect::<Result<_, _>>()?,
            one => vec![serde_json::from_value(one)?],
        });
    }
    let (Some(model), Some(n0)) = (args.model, args.n) else {
        return Err(Error::InvalidParameter("sweep needs --manifest or --model and --n".into()));
    };
    let n1 = args.n_max.unwrap_or(n0);
    let model = match model {
        ModelArg::Ba => Model::Ba,
        ModelArg::Gnm => Model::Gnm,
        ModelArg::Gnp => Model::Gnp,
    };
    let configs = (n0..=n1)
        .map(|n| {
            let p = args
                .threshold_eps
                .map(|eps| antidim::randgen::connectivity_threshold_p(n, eps))
                .or(args.p);
            let cfg = RandomModelConfig {
                model,
                n,
                m: args.m,
                p,
                seed: args.seed,
                samples: args.samples,
            };
            cfg.validate().map(|_| cfg)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(configs)
}

fn cmd_sweep(cli: &Cli, args: &SweepArgs) -> CliResult {
    let configs = sweep_configs(args)?;
    let mut out = open_out(&cli.out)?;
    let mut records = Vec::new();
    for cfg in &configs {
        let rec = sweep(cfg, cli.workers)?;
        log::info!(
            "n={} generated={} connected={} found={}",
            cfg.n,
            rec.generated,
            rec.connected,
            rec.found
        );
        if cli.format == Format::Json {
            write_json_line(&mut out, "sweep", &rec.config, &rec)?;
        }
        records.push(rec);
    }
    if cli.format == Format::Csv {
        write_sweep_csv(&mut out, &records)?;
    }
    out.flush()?;
    Ok(())
}

fn cmd_classify(cli: &Cli, order: Option<usize>, extended: bool, density: bool) -> CliResult {
    let opts = ClassifyOptions {
        density_breakdown: density,
        ..Default::default()
    };
    let run = || -> Result<_, Error> {
        match order {
            Some(n) => {
                let graphs = if extended {
                    enumerate_connected_extended(n)?
                } else {
                    enumerate_connected(n)?
                };
                classify_stream(graphs.into_iter().map(Ok), &opts)
            }
            None => classify_stream(read_graph6_stream(io::stdin().lock()), &opts),
        }
    };
    let result = if cli.workers > 0 {
        rayon_pool(cli.workers)?.install(run)?
    } else {
        run()?
    };
    if result.malformed > 0 {
        log::warn!("{} malformed entries skipped", result.malformed);
    }
    let mut out = open_out(&cli.out)?;
    match cli.format {
        Format::Json => {
            for row in &result.rows {
                let config = serde_json::json!({ "order": row.order, "source": order.map_or("stdin", |_| "enumerate") });
                write_json_line(&mut out, "classify", config, row)?;
            }
        }
        Format::Csv => write_classification_csv(&mut out, &result.rows)?,
    }
    out.flush()?;
    Ok(())
}

fn rayon_pool(workers: usize) -> Result<rayon::ThreadPool, Error> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))
}

fn cmd_audit(cli: &Cli, files: &[PathBuf], opts: EdgeOpts) -> CliResult {
    let policy = EffortPolicy {
        time_limit: Some(budget(cli).unwrap_or(AUDIT_BUDGET)),
        ..Default::default()
    };
    let mut audits = Vec::new();
    let mut exceeded = false;
    let mut out = open_out(&cli.out)?;
    for path in files {
        let g = parse_edge_list(BufReader::new(File::open(path)?), &opts.options())?;
        let name = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        let audit = audit_network(&g, &name, &policy)?;
        log::info!("{name}: n={} m={} verdict={:?} in {:.2}s", audit.n, audit.m, audit.verdict, audit.seconds);
        exceeded |= audit.budget_exceeded;
        if cli.format == Format::Json {
            write_json_line(&mut out, "audit", serde_json::json!({ "file": path }), &audit)?;
        }
        audits.push(audit);
    }
    if cli.format == Format::Csv {
        write_audit_csv(&mut out, &audits)?;
    }
    out.flush()?;
    if exceeded {
        return Err(Failure::Budget);
    }
    Ok(())
}

fn cmd_convert(cli: &Cli, input: &GraphInput, to: ConvertTarget) -> CliResult {
    let g = read_graph(input)?;
    let mut out = open_out(&cli.out)?;
    match to {
        ConvertTarget::Graph6 => writeln!(out, "{}", write_graph6(&g.graph))?,
        ConvertTarget::Edges => {
            for (u, v) in g.graph.edges() {
                writeln!(out, "{} {}", g.label(u), g.label(v))?;
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Analyze { input, oracle_limit } => cmd_analyze(cli, input, *oracle_limit),
        Command::Oracle { input, limit } => cmd_oracle(cli, input, *limit),
        Command::Harden { input, factors } => cmd_harden(cli, input, factors),
        Command::Family { name, param } => cmd_family(cli, name, *param),
        Command::Enumerate { n, trees, extended } => cmd_enumerate(cli, *n, *trees, *extended),
        Command::Sweep(args) => cmd_sweep(cli, args),
        Command::Classify {
            enumerate,
            extended,
            density,
        } => cmd_classify(cli, *enumerate, *extended, *density),
        Command::Audit { edges, opts } => cmd_audit(cli, edges, *opts),
        Command::Convert { input, to } => cmd_convert(cli, input, *to),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .target(env_logger::Target::Stderr)
        .init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Budget) => ExitCode::from(3),
        Err(Failure::Input(e)) => {
            eprintln!("antidim: {e}");
            ExitCode::from(2)
        }
    }
}
