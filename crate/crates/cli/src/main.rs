mod report;

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use balanced_biclique::count::process_peak_rss;
use balanced_biclique::ingest::{
    generate_random_bigraph, ingest, write_canonical, EdgeBudget, GeneratorParams, IngestError, IngestSpec,
    InputFormat, RatingRule, SigningRule,
};
use balanced_biclique::oracle::DEFAULT_SIZE_CAP;
use balanced_biclique::{
    count_balanced, Algorithm, AnchorSide, CandidateDirection, CountError, CountOptions, MemoryMethod, Side,
    SignedBipartiteGraph,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

use report::{Output, Row, RowWriter, Status};

#[derive(Parser)]
#[command(
    name = "bbcount",
    version,
    about = "Count balanced (p,q)-bicliques in signed bipartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count balanced (p,q)-bicliques in one graph.
    Count(CountArgs),
    /// Run a grid of algorithms and (p,q) values over one or more graphs.
    Bench(BenchArgs),
    /// Convert an input file to the canonical signed format.
    Convert(ConvertArgs),
    /// Generate a random signed bipartite graph in canonical format.
    Generate(GenerateArgs),
    /// Print graph statistics.
    Stats(StatsArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Canonical,
    Edgelist,
    Ratings,
    Unsigned,
}

#[derive(Args)]
struct InputArgs {
    #[arg(long, value_enum, default_value_t = Format::Canonical)]
    format: Format,
    /// Rating binarization for `--format ratings`: jester, epinions or threshold:<x>.
    #[arg(long, value_parser = parse_rating_rule)]
    pos_rule: Option<RatingRule>,
    /// Probability of a positive sign for `--format unsigned`.
    #[arg(long, default_value_t = 0.7)]
    p_pos: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct RunArgs {
    /// Per-run time limit, e.g. 500ms, 30s, 5m, 1h (bare numbers are seconds).
    #[arg(long, value_parser = parse_duration)]
    time_limit: Option<Duration>,
    /// Worker threads for the anchor loop.
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = AnchorChoice::Auto)]
    anchor_side: AnchorChoice,
    /// Which side of the anchor's priority BBVP draws candidates from.
    #[arg(long, default_value = "below", value_parser = parse_direction)]
    bbvp_candidates: CandidateDirection,
    /// Anchors processed between time-limit checks.
    #[arg(long, default_value_t = 64)]
    check_every: usize,
    /// Largest m*n the brute-force oracle accepts.
    #[arg(long, default_value_t = DEFAULT_SIZE_CAP)]
    oracle_cap: usize,
}

impl RunArgs {
    fn options(&self) -> CountOptions {
        CountOptions {
            anchor_side: self.anchor_side.into(),
            threads: self.threads,
            time_limit: self.time_limit,
            check_every: self.check_every,
            candidate_direction: self.bbvp_candidates,
            oracle_cap: self.oracle_cap,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AnchorChoice {
    Auto,
    Left,
    Right,
}

impl From<AnchorChoice> for AnchorSide {
    fn from(c: AnchorChoice) -> Self {
        match c {
            AnchorChoice::Auto => AnchorSide::Auto,
            AnchorChoice::Left => AnchorSide::Left,
            AnchorChoice::Right => AnchorSide::Right,
        }
    }
}

#[derive(Args)]
struct CountArgs {
    /// Input file, or `-` for stdin.
    input: PathBuf,
    #[arg(long, default_value = "bbvp", value_parser = parse_algorithm)]
    algo: Algorithm,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
    /// Also run the brute-force oracle and fail on disagreement.
    #[arg(long)]
    verify: bool,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(flatten)]
    input_args: InputArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct BenchArgs {
    /// Input files.
    #[arg(required = true)]
    inputs: Vec<PathBuf>,
    /// Comma-separated algorithms.
    #[arg(long, default_value = "baseline,bbwc,bbvp", value_delimiter = ',', value_parser = parse_algorithm)]
    algo: Vec<Algorithm>,
    /// Values of p: a list (3,4,5), a range (3-5 or 3..5), or a mix.
    #[arg(long, value_parser = parse_int_list)]
    p: IntList,
    #[arg(long, value_parser = parse_int_list)]
    q: IntList,
    #[arg(long, default_value_t = 1)]
    repetitions: usize,
    #[arg(long, value_enum, default_value_t = Output::Csv)]
    output: Output,
    #[command(flatten)]
    input_args: InputArgs,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args)]
struct ConvertArgs {
    input: PathBuf,
    /// Output file (stdout when omitted).
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Also write the `side index original_id` map here.
    #[arg(long)]
    id_map: Option<PathBuf>,
    #[command(flatten)]
    input_args: InputArgs,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    left: usize,
    #[arg(long)]
    right: usize,
    /// Independent edge probability per vertex pair.
    #[arg(long, conflicts_with = "edges", required_unless_present = "edges")]
    density: Option<f64>,
    /// Exact number of edges, sampled uniformly.
    #[arg(long)]
    edges: Option<usize>,
    #[arg(long, default_value_t = 0.7)]
    p_pos: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    output: Output,
    #[command(flatten)]
    input_args: InputArgs,
}

#[derive(Clone, Debug)]
struct IntList(Vec<usize>);

fn parse_algorithm(s: &str) -> Result<Algorithm, String> {
    s.parse()
}

fn parse_rating_rule(s: &str) -> Result<RatingRule, String> {
    s.parse()
}

fn parse_direction(s: &str) -> Result<CandidateDirection, String> {
    s.parse()
}

fn parse_duration(s: &str) -> Result<Duration, String> {
    let s = s.trim();
    let split = s.find(|c: char| c.is_ascii_alphabetic()).unwrap_or(s.len());
    let (number, unit) = s.split_at(split);
    let value: f64 = number.trim().parse().map_err(|_| format!("invalid duration `{s}`"))?;
    let seconds = match unit {
        "" | "s" => value,
        "ms" => value / 1000.0,
        "m" | "min" => value * 60.0,
        "h" => value * 3600.0,
        _ => return Err(format!("unknown duration unit `{unit}` (expected ms, s, m or h)")),
    };
    if !seconds.is_finite() || seconds <= 0.0 {
        return Err(format!("time limit must be positive, got `{s}`"));
    }
    Ok(Duration::from_secs_f64(seconds))
}

fn parse_int_list(s: &str) -> Result<IntList, String> {
    let mut out = Vec::new();
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let range = part.split_once("..").or_else(|| part.split_once('-'));
        match range {
            Some((a, b)) => {
                let a: usize = a.trim().parse().map_err(|_| format!("invalid range `{part}`"))?;
                let b: usize = b.trim().parse().map_err(|_| format!("invalid range `{part}`"))?;
                if a > b {
                    return Err(format!("empty range `{part}`"));
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| format!("invalid integer `{part}`"))?),
        }
    }
    if out.is_empty() {
        return Err("expected at least one value".into());
    }
    Ok(IntList(out))
}

fn ingest_spec(args: &InputArgs) -> Result<IngestSpec> {
    let spec = match args.format {
        Format::Canonical => IngestSpec::canonical(),
        Format::Edgelist => IngestSpec::signed(),
        Format::Ratings => {
            let rule = args.pos_rule.ok_or_else(|| {
                IngestError::InvalidSpec("--format ratings needs --pos-rule (jester, epinions or threshold:<x>)".into())
            })?;
            IngestSpec::new(InputFormat::RatedEdgeList, SigningRule::RatingThreshold(rule))
        }
        Format::Unsigned => IngestSpec::unsigned(args.p_pos, args.seed),
    };
    spec.validate()?;
    Ok(spec)
}

fn open_input(path: &Path) -> Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        return Ok(Box::new(BufReader::new(io::stdin().lock())));
    }
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(file)))
}

fn load(path: &Path, args: &InputArgs) -> Result<balanced_biclique::ingest::Ingested> {
    let spec = ingest_spec(args)?;
    ingest(open_input(path)?, &spec).with_context(|| format!("reading {}", path.display()))
}

fn dataset_name(path: &Path) -> String {
    if path == Path::new("-") {
        return "stdin".into();
    }
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

#[derive(Debug, thiserror::Error)]
#[error("verification failed: {algo} counted {got} but the oracle counted {expected}")]
struct VerifyMismatch {
    algo: Algorithm,
    got: u128,
    expected: u128,
}

fn cmd_count(args: CountArgs) -> Result<()> {
    let g = load(&args.input, &args.input_args)?.graph;
    let opts = args.run.options();
    let mut report = count_balanced(&g, args.algo, args.p, args.q, &opts)?;
    if let Some(rss) = process_peak_rss() {
        report.peak_mem_bytes = rss;
        report.mem_method = MemoryMethod::Vmhwm;
    }

    let verified = if args.verify {
        match count_balanced(&g, Algorithm::Oracle, args.p, args.q, &opts) {
            Ok(oracle) if oracle.count != report.count => {
                return Err(VerifyMismatch {
                    algo: args.algo,
                    got: report.count,
                    expected: oracle.count,
                }
                .into())
            }
            Ok(_) => Some(true),
            Err(CountError::SizeGuardExceeded { m, n, cap }) => {
                eprintln!("verify skipped: {m}x{n} graph exceeds the oracle cap of {cap} (see --oracle-cap)");
                None
            }
            Err(e) => return Err(e.into()),
        }
    } else {
        None
    };

    let dataset = dataset_name(&args.input);
    let mut out = io::stdout().lock();
    match args.output {
        Output::Text => report::write_text(&mut out, &dataset, &report, verified)?,
        Output::Csv | Output::Json => {
            let mut w = RowWriter::new(&mut out, args.output)?;
            w.write(&Row::from_report(&dataset, &report))?;
            w.finish()?;
        }
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<()> {
    let opts = args.run.options();
    for &v in args.p.0.iter().chain(&args.q.0) {
        if v < 2 {
            return Err(CountError::InvalidParameters {
                p: *args.p.0.iter().min().unwrap(),
                q: *args.q.0.iter().min().unwrap(),
            }
            .into());
        }
    }
    if args.repetitions == 0 {
        bail!(IngestError::InvalidSpec("--repetitions must be at least 1".into()));
    }
    let graphs: Vec<(String, SignedBipartiteGraph)> = args
        .inputs
        .iter()
        .map(|path| Ok((dataset_name(path), load(path, &args.input_args)?.graph)))
        .collect::<Result<_>>()?;

    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut w = RowWriter::new(&mut out, args.output)?;
    for (dataset, g) in &graphs {
        for &algo in &args.algo {
            for &p in &args.p.0 {
                for &q in &args.q.0 {
                    for _ in 0..args.repetitions {
                        let row = match count_balanced(g, algo, p, q, &opts) {
                            Ok(report) => Row::from_report(dataset, &report),
                            Err(CountError::TimeLimitExceeded(limit)) => {
                                Row::without_result(dataset, algo, p, q, Status::Inf, Some(limit))
                            }
                            Err(e) => {
                                eprintln!("{dataset} {algo} p={p} q={q}: {e}");
                                Row::without_result(dataset, algo, p, q, Status::Error, None)
                            }
                        };
                        w.write(&row)?;
                    }
                }
            }
        }
    }
    w.finish()?;
    Ok(())
}

fn cmd_convert(args: ConvertArgs) -> Result<()> {
    let ingested = load(&args.input, &args.input_args)?;
    let mut out = open_output(args.out.as_deref())?;
    write_canonical(&ingested.graph, &mut out)?;
    out.flush()?;
    if let Some(path) = &args.id_map {
        let mut w = open_output(Some(path))?;
        ingested.ids.write_to(&mut w)?;
        w.flush()?;
    }
    Ok(())
}

fn cmd_generate(args: GenerateArgs) -> Result<()> {
    let edges = match (args.density, args.edges) {
        (Some(d), None) => {
            if !(0.0..=1.0).contains(&d) {
                bail!(IngestError::InvalidSpec(format!("density {d} outside [0, 1]")));
            }
            EdgeBudget::Density(d)
        }
        (None, Some(k)) => EdgeBudget::Exact(k),
        _ => unreachable!("clap enforces exactly one of --density and --edges"),
    };
    let g = generate_random_bigraph(GeneratorParams {
        left: args.left,
        right: args.right,
        edges,
        p_pos: args.p_pos,
        seed: args.seed,
    })?;
    let mut out = open_output(args.out.as_deref())?;
    write_canonical(&g, &mut out)?;
    out.flush()?;
    Ok(())
}

fn cmd_stats(args: StatsArgs) -> Result<()> {
    let g = load(&args.input, &args.input_args)?.graph;
    let stats = g.stats();
    let mut out = io::stdout().lock();
    match args.output {
        Output::Text => {
            writeln!(out, "dataset: {}", dataset_name(&args.input))?;
            writeln!(out, "left vertices: {}", stats.left_count)?;
            writeln!(out, "right vertices: {}", stats.right_count)?;
            writeln!(
                out,
                "edges: {} ({} positive, {} negative)",
                stats.edge_count, stats.positive_edges, stats.negative_edges
            )?;
            writeln!(out, "max degree: {}", stats.max_degree)?;
            let smaller = if stats.right_count < stats.left_count {
                Side::Right
            } else {
                Side::Left
            };
            writeln!(out, "default anchor side: {smaller}")?;
            for (side, hist) in [
                ("left", &stats.left_degree_histogram),
                ("right", &stats.right_degree_histogram),
            ] {
                let cells: Vec<String> = hist
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(d, c)| format!("{d}:{c}"))
                    .collect();
                writeln!(out, "{side} degree histogram: {}", cells.join(" "))?;
            }
        }
        Output::Json => {
            serde_json::to_writer_pretty(&mut out, &stats)?;
            writeln!(out)?;
        }
        Output::Csv => {
            let mut w = csv::Writer::from_writer(&mut out);
            w.write_record([
                "dataset",
                "left",
                "right",
                "edges",
                "positive",
                "negative",
                "max_degree",
            ])?;
            w.write_record([
                dataset_name(&args.input),
                stats.left_count.to_string(),
                stats.right_count.to_string(),
                stats.edge_count.to_string(),
                stats.positive_edges.to_string(),
                stats.negative_edges.to_string(),
                stats.max_degree.to_string(),
            ])?;
            w.flush()?;
        }
    }
    Ok(())
}

/// 2: bad input or parameters, 3: count overflow, 4: time limit, 1: anything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<CountError>() {
            return match e {
                CountError::InvalidParameters { .. } | CountError::SizeGuardExceeded { .. } => 2,
                CountError::Overflow => 3,
                CountError::TimeLimitExceeded(_) => 4,
                CountError::ThreadPool(_) => 1,
            };
        }
        if let Some(e) = cause.downcast_ref::<IngestError>() {
            return match e {
                IngestError::Io(_) => 1,
                _ => 2,
            };
        }
    }
    1
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Count(a) => cmd_count(a),
        Command::Bench(a) => cmd_bench(a),
        Command::Convert(a) => cmd_convert(a),
        Command::Generate(a) => cmd_generate(a),
        Command::Stats(a) => cmd_stats(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e)
            if e.chain().any(|c| {
                c.downcast_ref::<io::Error>()
                    .is_some_and(|e| e.kind() == io::ErrorKind::BrokenPipe)
            }) =>
        {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
