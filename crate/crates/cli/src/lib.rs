//! The `rdelta` command line: `delta`, `profile`, `verify`, `generate` and
//! `bench`. Everything lives in the library so tests can drive commands
//! without spawning a process.
//!
//! Exit codes: 0 ok, 1 input error, 2 internal invariant violation,
//! 3 verification mismatch.

pub mod alloc;

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rdelta_core::generate::{generate, Family};
use rdelta_core::lca::LcaOracle;
use rdelta_core::oracle::{naive_delta, naive_profile, NAIVE_LIMIT};
use rdelta_core::rstree::RSuffixTree;
use rdelta_core::sweep::{DeltaResult, SweepProfile};
use rdelta_core::{
    analyze, dmn, encode, parse_rle, sweep, EngineOptions, InvariantViolation, Rational, RleError, RleString, RmqKind,
    SortStrategy,
};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
    #[error("{0}")]
    Mismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Invariant(_) => 2,
            CliError::Mismatch(_) => 3,
        }
    }
}

impl From<RleError> for CliError {
    fn from(e: RleError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Input(e.to_string())
    }
}

pub type CliResult<T = ()> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "rdelta", version, about = "Substring complexity delta of run-length encoded strings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute delta = max_k |Substr(k)| / k of one input.
    Delta(DeltaArgs),
    /// Print |Substr(k)| at every length the sweep evaluates.
    Profile(ProfileArgs),
    /// Cross-check the compressed engine against the uncompressed oracle.
    Verify(VerifyArgs),
    /// Write a generated string as run-length text.
    Generate(GenerateArgs),
    /// Time both engines over generated inputs and emit CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    /// `rle` for files ending in `.rle`, `raw` otherwise.
    Auto,
    /// Bytes of the file, one symbol per byte.
    Raw,
    /// One `symbol exponent` pair per line.
    Rle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineChoice {
    Compressed,
    Oracle,
    /// Run both and fail with exit code 3 if they disagree.
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SortArg {
    Auto,
    Comparison,
    Radix,
}

impl From<SortArg> for SortStrategy {
    fn from(s: SortArg) -> Self {
        match s {
            SortArg::Auto => SortStrategy::Auto,
            SortArg::Comparison => SortStrategy::Comparison,
            SortArg::Radix => SortStrategy::Radix,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Input file, or `-` for standard input.
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
    /// Merge adjacent runs of equal symbols instead of rejecting them.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Clone, Args)]
pub struct EngineArgs {
    #[arg(long, value_enum, default_value_t = EngineChoice::Compressed)]
    pub engine: EngineChoice,
    /// Integer sort used by the compressed engine.
    #[arg(long, value_enum, default_value_t = SortArg::Auto)]
    pub sort: SortArg,
    /// Use the linear-space block RMQ instead of the sparse table.
    #[arg(long)]
    pub rmq_linear: bool,
}

impl EngineArgs {
    pub fn options(&self) -> EngineOptions {
        engine_options(self.sort, self.rmq_linear)
    }
}

fn engine_options(sort: SortArg, rmq_linear: bool) -> EngineOptions {
    EngineOptions {
        sort: sort.into(),
        rmq: if rmq_linear { RmqKind::Block } else { RmqKind::SparseTable },
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
    /// Shorthand for `--output json`.
    #[arg(long, conflicts_with = "output")]
    pub json: bool,
}

impl OutputArgs {
    fn format(&self, default: OutputFormat) -> OutputFormat {
        if self.json {
            OutputFormat::Json
        } else {
            self.output.unwrap_or(default)
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct DeltaArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[command(flatten)]
    pub output: OutputArgs,
    /// Write the r-suffix tree in DOT format to this file.
    #[arg(long, value_name = "PATH")]
    pub dump_tree: Option<PathBuf>,
    /// Write the per-run (leaf, exponent, b-depth) table as CSV to this file.
    #[arg(long, value_name = "PATH")]
    pub dump_bdepth: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ProfileArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[command(flatten)]
    pub engine: EngineArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenBatch {
    RandomRuns,
    RandomText,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Input file to check; omit it and pass `--gen` to check a batch.
    #[arg(required_unless_present = "gen", conflicts_with = "gen")]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
    #[arg(long)]
    pub normalize: bool,
    /// Generated family for batch mode.
    #[arg(long, value_enum)]
    pub gen: Option<GenBatch>,
    #[arg(long, default_value_t = 100)]
    pub count: u64,
    #[arg(long, default_value_t = 512)]
    pub max_n: u64,
    #[arg(long, default_value_t = 3)]
    pub sigma: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SortArg::Auto)]
    pub sort: SortArg,
    #[arg(long)]
    pub rmq_linear: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Fibonacci,
    ThueMorse,
    RandomRuns,
    RandomText,
    Power,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub family: FamilyArg,
    /// Order of the Fibonacci or Thue-Morse word.
    #[arg(long, default_value_t = 10)]
    pub order: u32,
    #[arg(long, default_value_t = 100)]
    pub runs: usize,
    #[arg(long, default_value_t = 1000)]
    pub len: usize,
    #[arg(long, default_value_t = 2)]
    pub sigma: u32,
    #[arg(long, default_value_t = 8)]
    pub max_exponent: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Symbol of the power string.
    #[arg(long, default_value_t = 'a')]
    pub symbol: char,
    /// Length of the power string.
    #[arg(long, default_value_t = 1 << 20)]
    pub length: u64,
    /// Write the expanded string instead of run-length text.
    #[arg(long)]
    pub raw: bool,
}

impl GenerateArgs {
    pub fn family(&self) -> Family {
        match self.family {
            FamilyArg::Fibonacci => Family::Fibonacci { order: self.order },
            FamilyArg::ThueMorse => Family::ThueMorse { order: self.order },
            FamilyArg::RandomRuns => Family::RandomRuns {
                runs: self.runs,
                sigma: self.sigma,
                max_exponent: self.max_exponent,
                seed: self.seed,
            },
            FamilyArg::RandomText => Family::RandomText { len: self.len, sigma: self.sigma, seed: self.seed },
            FamilyArg::Power => Family::PowerString { symbol: self.symbol as u32, length: self.length },
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Numbers of runs to generate.
    #[arg(long, value_delimiter = ',', default_value = "100,1000,10000")]
    pub runs: Vec<usize>,
    /// Exponents are drawn from [1, 2^bits], one row per value.
    #[arg(long, value_delimiter = ',', default_value = "10,30,50")]
    pub exponent_bits: Vec<u32>,
    #[arg(long, default_value_t = 4)]
    pub sigma: u32,
    /// Length of a random text for the oracle comparison row; 0 skips it.
    #[arg(long, default_value_t = 100_000)]
    pub oracle_n: usize,
    /// Repetitions per row; the minimum time is reported.
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = SortArg::Auto)]
    pub sort: SortArg,
    #[arg(long)]
    pub rmq_linear: bool,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> CliResult {
    match &cli.command {
        Command::Delta(args) => cmd_delta(args, out),
        Command::Profile(args) => cmd_profile(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Generate(args) => cmd_generate(args, out),
        Command::Bench(args) => cmd_bench(args, out),
    }
}

pub fn read_input(path: &Path, format: InputFormat, normalize: bool) -> CliResult<RleString> {
    let bytes = if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf)?;
        buf
    } else {
        std::fs::read(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    let format = match format {
        InputFormat::Auto if path.extension().is_some_and(|e| e == "rle") => InputFormat::Rle,
        InputFormat::Auto => InputFormat::Raw,
        f => f,
    };
    match format {
        InputFormat::Rle => {
            let text = String::from_utf8(bytes)
                .map_err(|_| CliError::Input(format!("{}: run-length input is not UTF-8", path.display())))?;
            parse_rle(&text, normalize).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
        }
        _ => Ok(encode(&bytes)),
    }
}

/// The oracle's view of the input; rejected above its size limit.
fn oracle_text(rle: &RleString) -> CliResult<Vec<u32>> {
    rle.expand(NAIVE_LIMIT as u64).map_err(|_| {
        CliError::Input(format!(
            "oracle engine rejected: n = {} exceeds its limit of {NAIVE_LIMIT}",
            rle.n()
        ))
    })
}

fn compare(what: &str, compressed: &DeltaResult, oracle: &DeltaResult) -> CliResult {
    if compressed.delta != oracle.delta || compressed.argmax_k != oracle.argmax_k {
        return Err(CliError::Mismatch(format!(
            "{what}: compressed engine gives {} at k = {}, oracle gives {} at k = {}",
            compressed.delta, compressed.argmax_k, oracle.delta, oracle.argmax_k
        )));
    }
    Ok(())
}

fn write_file(path: &Path, content: &str) -> CliResult {
    std::fs::write(path, content).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn delta_json(res: &DeltaResult) -> serde_json::Value {
    json!({
        "delta": {"num": res.delta.num(), "den": res.delta.den(), "value": res.delta.to_f64()},
        "argmax_k": res.argmax_k,
        "r": res.r,
        "n": res.n,
        "sigma": res.sigma,
    })
}

/// Recovers the exact rational from the JSON emitted by `delta --json`.
pub fn parse_delta_json(text: &str) -> Option<Rational> {
    let v: serde_json::Value = serde_json::from_str(text).ok()?;
    let num = v["delta"]["num"].as_u64()?;
    let den = v["delta"]["den"].as_u64()?;
    (den > 0).then(|| Rational::new(num, den))
}

pub fn cmd_delta(args: &DeltaArgs, out: &mut dyn Write) -> CliResult {
    let rle = read_input(&args.input.input, args.input.input_format, args.input.normalize)?;
    let opts = args.engine.options();
    let needs_compressed = args.engine.engine != EngineChoice::Oracle
        || args.dump_tree.is_some()
        || args.dump_bdepth.is_some();
    let analysis = if needs_compressed { Some(analyze(&rle, opts)?) } else { None };
    if let Some(a) = &analysis {
        if let Some(path) = &args.dump_tree {
            write_file(path, &a.tree.to_dot(&rle))?;
        }
        if let Some(path) = &args.dump_bdepth {
            let mut csv = String::from("run,leaf,symbol,exponent,b_depth\n");
            for rec in &a.leaves {
                let sym = char::from_u32(rle.symbols().external(rec.symbol)).unwrap_or(char::REPLACEMENT_CHARACTER);
                writeln!(csv, "{},{},{},{},{}", rec.suffix + 1, rec.leaf, sym, rec.exponent, rec.b_depth).unwrap();
            }
            write_file(path, &csv)?;
        }
    }
    let res = match args.engine.engine {
        EngineChoice::Compressed => analysis.unwrap().result,
        EngineChoice::Oracle => naive_delta(&oracle_text(&rle)?)?,
        EngineChoice::Both => {
            let oracle = naive_delta(&oracle_text(&rle)?)?;
            let res = analysis.unwrap().result;
            compare("delta", &res, &oracle)?;
            res
        }
    };
    match args.output.format(OutputFormat::Text) {
        OutputFormat::Json => writeln!(out, "{}", delta_json(&res))?,
        OutputFormat::Csv => {
            writeln!(out, "delta_num,delta_den,delta,argmax_k,r,n,sigma")?;
            writeln!(
                out,
                "{},{},{:?},{},{},{},{}",
                res.delta.num(),
                res.delta.den(),
                res.delta.to_f64(),
                res.argmax_k,
                res.r,
                res.n,
                res.sigma
            )?;
        }
        OutputFormat::Text => {
            writeln!(out, "delta     {} ({:.6})", res.delta, res.delta.to_f64())?;
            writeln!(out, "argmax k  {}", res.argmax_k)?;
            writeln!(out, "|S(k)|    {}", res.substr_at_argmax)?;
            writeln!(out, "r         {}", res.r)?;
            writeln!(out, "n         {}", res.n)?;
            writeln!(out, "sigma     {}", res.sigma)?;
        }
    }
    Ok(())
}

pub fn cmd_profile(args: &ProfileArgs, out: &mut dyn Write) -> CliResult {
    let rle = read_input(&args.input.input, args.input.input_format, args.input.normalize)?;
    let rows: Vec<(u64, u64)> = match args.engine.engine {
        EngineChoice::Compressed => analyze(&rle, args.engine.options())?.result.change_points,
        EngineChoice::Oracle => dense_rows(&naive_profile(&oracle_text(&rle)?)?.counts),
        EngineChoice::Both => {
            let counts = naive_profile(&oracle_text(&rle)?)?.counts;
            let a = analyze(&rle, args.engine.options())?;
            if let Some(k) = (1..=rle.n()).find(|&k| a.profile.count_at(k) != counts[k as usize - 1]) {
                return Err(CliError::Mismatch(format!(
                    "profile: |S({k})| is {} by the compressed engine, {} by the oracle",
                    a.profile.count_at(k),
                    counts[k as usize - 1]
                )));
            }
            a.result.change_points
        }
    };
    let ratio = |k: u64, c: u64| c as f64 / k as f64;
    match args.output.format(OutputFormat::Csv) {
        OutputFormat::Csv => {
            writeln!(out, "k,substr,ratio")?;
            for &(k, c) in &rows {
                writeln!(out, "{k},{c},{:?}", ratio(k, c))?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> =
                rows.iter().map(|&(k, c)| json!({"k": k, "substr": c, "ratio": ratio(k, c)})).collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
        OutputFormat::Text => {
            writeln!(out, "{:>20} {:>20} {:>12}", "k", "|S(k)|", "ratio")?;
            for &(k, c) in &rows {
                writeln!(out, "{k:>20} {c:>20} {:>12.6}", ratio(k, c))?;
            }
        }
    }
    Ok(())
}

fn dense_rows(counts: &[u64]) -> Vec<(u64, u64)> {
    counts.iter().enumerate().map(|(i, &c)| (i as u64 + 1, c)).collect()
}

/// What `verify` compares: the result and the profile of one engine.
pub type Engine<'a> = &'a dyn Fn(&RleString) -> Result<(DeltaResult, SweepProfile), InvariantViolation>;

/// One verification input and how to reproduce it.
pub struct VerifyCase {
    pub repro: String,
    pub rle: RleString,
}

/// Checks `engine` against the oracle on every case, stopping at the first
/// mismatch. Returns the number of cases checked.
pub fn verify_cases(cases: impl IntoIterator<Item = VerifyCase>, engine: Engine, out: &mut dyn Write) -> CliResult<u64> {
    let mut checked = 0;
    for case in cases {
        let text = oracle_text(&case.rle)?;
        let oracle = naive_delta(&text)?;
        let counts = naive_profile(&text)?.counts;
        let (res, profile) = engine(&case.rle)?;
        let repro = || format!("reproduce with: {}\ninput ({} runs):\n{}", case.repro, case.rle.r(), case.rle.to_rle_text());
        if let Err(CliError::Mismatch(msg)) = compare("delta", &res, &oracle) {
            return Err(CliError::Mismatch(format!("{msg}\n{}", repro())));
        }
        if let Some(k) = (1..=case.rle.n()).find(|&k| profile.count_at(k) != counts[k as usize - 1]) {
            return Err(CliError::Mismatch(format!(
                "|S({k})| is {} by the compressed engine, {} by the oracle\n{}",
                profile.count_at(k),
                counts[k as usize - 1],
                repro()
            )));
        }
        checked += 1;
    }
    let noun = if checked == 1 { "case" } else { "cases" };
    writeln!(out, "verified {checked} {noun}: compressed engine matches the oracle")?;
    Ok(checked)
}

/// The deterministic parameters of batch case `index`.
pub fn batch_family(gen: GenBatch, seed: u64, index: u64, sigma: u32, max_n: u64) -> Family {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let max_n = max_n.max(1);
    match gen {
        GenBatch::RandomRuns => {
            let max_exponent = rng.gen_range(1..=max_n.min(8));
            let runs = rng.gen_range(1..=max_n / max_exponent) as usize;
            Family::RandomRuns { runs, sigma, max_exponent, seed: rng.gen() }
        }
        GenBatch::RandomText => Family::RandomText { len: rng.gen_range(1..=max_n) as usize, sigma, seed: rng.gen() },
    }
}

fn family_command(family: &Family) -> String {
    match *family {
        Family::RandomRuns { runs, sigma, max_exponent, seed } => format!(
            "rdelta generate random-runs --runs {runs} --sigma {sigma} --max-exponent {max_exponent} --seed {seed}"
        ),
        Family::RandomText { len, sigma, seed } => {
            format!("rdelta generate random-text --len {len} --sigma {sigma} --seed {seed}")
        }
        Family::Fibonacci { order } => format!("rdelta generate fibonacci --order {order}"),
        Family::ThueMorse { order } => format!("rdelta generate thue-morse --order {order}"),
        Family::PowerString { symbol, length } => {
            let symbol = char::from_u32(symbol).unwrap_or('?');
            format!("rdelta generate power --symbol {symbol} --length {length}")
        }
    }
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let opts = engine_options(args.sort, args.rmq_linear);
    let engine = |rle: &RleString| analyze(rle, opts).map(|a| (a.result, a.profile));
    verify_with(args, &engine, out)
}

/// `verify` with an injectable engine.
pub fn verify_with(args: &VerifyArgs, engine: Engine, out: &mut dyn Write) -> CliResult {
    match (&args.input, args.gen) {
        (Some(path), _) => {
            let rle = read_input(path, args.input_format, args.normalize)?;
            let case = VerifyCase { repro: format!("rdelta verify {}", path.display()), rle };
            verify_cases([case], engine, out)?;
        }
        (None, Some(gen)) => {
            let mut cases = Vec::with_capacity(args.count as usize);
            for i in 0..args.count {
                let family = batch_family(gen, args.seed, i, args.sigma, args.max_n);
                let rle = generate(&family)?;
                let repro = format!("{} (verify seed {}, case {i})", family_command(&family), args.seed);
                cases.push(VerifyCase { repro, rle });
            }
            verify_cases(cases, engine, out)?;
        }
        (None, None) => return Err(CliError::Input("verify needs an input file or --gen".into())),
    }
    Ok(())
}

const RAW_LIMIT: u64 = 1 << 30;

pub fn cmd_generate(args: &GenerateArgs, out: &mut dyn Write) -> CliResult {
    let rle = generate(&args.family())?;
    if args.raw {
        let symbols = rle.expand(RAW_LIMIT)?;
        let text: String = symbols.iter().map(|&c| char::from_u32(c).unwrap_or(char::REPLACEMENT_CHARACTER)).collect();
        out.write_all(text.as_bytes())?;
    } else {
        out.write_all(rle.to_rle_text().as_bytes())?;
    }
    Ok(())
}

/// Minimum over `reps` runs of `f`, plus its last output.
fn timed<T>(reps: usize, mut f: impl FnMut() -> T) -> (Duration, T) {
    let mut best = Duration::MAX;
    let mut last = None;
    for _ in 0..reps.max(1) {
        let t = Instant::now();
        let v = f();
        best = best.min(t.elapsed());
        last = Some(v);
    }
    (best, last.unwrap())
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

/// Splits the compressed pipeline into tree construction and the rest.
fn bench_compressed(rle: &RleString, opts: EngineOptions, reps: usize) -> CliResult<(Duration, Duration, usize, Rational)> {
    let (build, tree) = timed(reps, || RSuffixTree::build(rle, opts.sort));
    let tree = tree?;
    let (build_lca, lca) = timed(reps, || LcaOracle::build(&tree, opts.rmq));
    let (solve, res) = timed(reps, || -> Result<DeltaResult, InvariantViolation> {
        let lists = dmn::build_rem_lists(&tree, rle);
        let leaves = dmn::compute_b_depths(&tree, rle, &lca, &lists, opts.sort);
        let roots = dmn::collect_dmn_roots(&tree, rle, &leaves);
        let explicit = dmn::collect_explicit_d_nodes(&tree, rle, &leaves);
        let events = sweep::build_events(&roots, &explicit);
        let (_, points) = sweep::compute_delta(&events, rle.n(), opts.sort)?;
        Ok(DeltaResult::from_points(points, rle.r(), rle.n(), rle.sigma()))
    });
    let res = res?;
    let (_, peak) = alloc::peak_during(|| analyze(rle, opts));
    Ok((build + build_lca, solve, peak, res.delta))
}

pub fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> CliResult {
    let opts = engine_options(args.sort, args.rmq_linear);
    writeln!(out, "family,engine,r,n,lg_n,build_ms,solve_ms,total_ms,peak_bytes,delta")?;
    for &runs in &args.runs {
        for &bits in &args.exponent_bits {
            if bits > 62 {
                return Err(CliError::Input(format!("exponent bits {bits} exceed 62")));
            }
            let family =
                Family::RandomRuns { runs, sigma: args.sigma, max_exponent: 1 << bits, seed: args.seed };
            let rle = generate(&family)?;
            let (build, solve, peak, delta) = bench_compressed(&rle, opts, args.reps)?;
            writeln!(
                out,
                "random-runs,compressed,{},{},{:.2},{:.3},{:.3},{:.3},{peak},{}",
                rle.r(),
                rle.n(),
                (rle.n() as f64).log2(),
                ms(build),
                ms(solve),
                ms(build + solve),
                delta.to_f64()
            )?;
        }
    }
    if args.oracle_n > 0 {
        let rle = generate(&Family::RandomText { len: args.oracle_n, sigma: args.sigma, seed: args.seed })?;
        let text = oracle_text(&rle)?;
        let (solve, res) = timed(args.reps, || naive_delta(&text));
        let (_, peak) = alloc::peak_during(|| naive_delta(&text));
        let delta = res?.delta;
        writeln!(
            out,
            "random-text,oracle,{},{},{:.2},0.000,{:.3},{:.3},{peak},{}",
            rle.r(),
            rle.n(),
            (rle.n() as f64).log2(),
            ms(solve),
            ms(solve),
            delta.to_f64()
        )?;
        let (build, solve, peak, delta) = bench_compressed(&rle, opts, args.reps)?;
        writeln!(
            out,
            "random-text,compressed,{},{},{:.2},{:.3},{:.3},{:.3},{peak},{}",
            rle.r(),
            rle.n(),
            (rle.n() as f64).log2(),
            ms(build),
            ms(solve),
            ms(build + solve),
            delta.to_f64()
        )?;
    }
    Ok(())
}
