//! `repseq` — longest subsequence under a repetition-exponent constraint.
//!
//! Subcommands: `find` runs the dynamic-programming drivers, `analyze`
//! reports the period/exponent structure of the input itself, `oracle` runs
//! the exhaustive reference search on small inputs, and `bench` times a
//! driver across input sizes and writes a CSV.
//!
//! Exit codes: 0 success, 2 usage error, 3 I/O error, 4 size guard exceeded.

use std::ffi::OsString;
use std::fs;
use std::io::Read;
use std::os::unix::ffi::OsStringExt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use repseq_bench::{run_scaling, write_csv, BenchError, ScalingConfig};
use repseq_core::{
    classify, oracle_longest, run_mode, Answer, D2Gate, DriverOptions, Error as CoreError,
    ExactRational, Limits, Mode, PeriodProfile, ORACLE_MAX_LEN,
};

#[derive(Parser)]
#[command(name = "repseq", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find the longest subsequence whose exponent lies in the mode's domain
    Find(FindArgs),
    /// Report the periods, exponents and repetition class of the text itself
    Analyze(AnalyzeArgs),
    /// Exhaustive reference search over all subsequences (small inputs only)
    Oracle(OracleArgs),
    /// Time a driver over generated inputs and write a scaling CSV
    Bench(BenchArgs),
}

/// Mode tokens; each selects one driver and its exponent domain.
#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Nonint,
    Periodic,
    Square,
    Any,
    D3,
    D4,
}

impl ModeArg {
    fn mode(self) -> Mode {
        match self {
            ModeArg::Nonint => Mode::NonInt,
            ModeArg::Periodic => Mode::Periodic,
            ModeArg::Square => Mode::Square,
            ModeArg::Any => Mode::Any,
            ModeArg::D3 => Mode::D3,
            ModeArg::D4 => Mode::D4,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Input source shared by find/analyze/oracle: inline text, file, or stdin.
#[derive(Args)]
struct InputArgs {
    /// Inline input text (taken as raw bytes, never trimmed)
    #[arg(long)]
    text: Option<OsString>,
    /// Read the input from this file
    #[arg(long, conflicts_with = "text")]
    file: Option<PathBuf>,
    /// Strip one trailing newline from file/stdin input (the default)
    #[arg(long)]
    trim_newline: bool,
    /// Keep file/stdin bytes exactly as read
    #[arg(long, conflicts_with = "trim_newline")]
    no_trim: bool,
}

#[derive(Args)]
struct FindArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[command(flatten)]
    input: InputArgs,
    /// Also print the witness subsequence and its period facts
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Use the stricter literal two-factor gate (never increases lengths)
    #[arg(long)]
    paper_literal: bool,
    /// Raise or lower every driver's input-size guard to this value
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    #[command(flatten)]
    input: InputArgs,
    /// Lower the oracle's input-size guard (cannot exceed the built-in cap)
    #[arg(long)]
    limit: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    mode: ModeArg,
    /// Comma-separated input sizes, strictly ascending (e.g. 32,64,128)
    #[arg(long)]
    sizes: String,
    /// Alphabet size for the generated inputs (1..=256)
    #[arg(long)]
    alphabet: usize,
    /// PRNG seed for input generation
    #[arg(long)]
    seed: u64,
    /// Timed repetitions per size (one untimed warmup is added)
    #[arg(long, default_value_t = 3)]
    reps: usize,
    /// Path of the CSV to write
    #[arg(long)]
    out: PathBuf,
}

enum CliError {
    Usage(String),
    Io(String),
    Guard(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::Guard(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Guard(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.code())
        }
    }
}

fn dispatch(command: Command) -> Result<(), CliError> {
    match command {
        Command::Find(args) => run_find(args),
        Command::Analyze(args) => run_analyze(args),
        Command::Oracle(args) => run_oracle(args),
        Command::Bench(args) => run_bench(args),
    }
}

/// Parses REPSEQ_THREADS if set; it must be a positive integer.
fn thread_override() -> Result<Option<usize>, CliError> {
    match std::env::var_os("REPSEQ_THREADS") {
        None => Ok(None),
        Some(raw) => match raw.to_str().and_then(|s| s.parse::<usize>().ok()) {
            Some(k) if k > 0 => Ok(Some(k)),
            _ => Err(CliError::Usage(format!(
                "REPSEQ_THREADS must be a positive integer, got {raw:?}"
            ))),
        },
    }
}

/// Caps driver parallelism when REPSEQ_THREADS is set. Results never depend
/// on the thread count, only wall time does.
fn install_thread_cap() -> Result<(), CliError> {
    if let Some(k) = thread_override()? {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    Ok(())
}

fn read_input(input: &InputArgs) -> Result<Vec<u8>, CliError> {
    if let Some(text) = &input.text {
        return Ok(text.clone().into_vec());
    }
    let mut data = match &input.file {
        Some(path) => fs::read(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut buf = Vec::new();
            std::io::stdin()
                .read_to_end(&mut buf)
                .map_err(|e| CliError::Io(format!("cannot read standard input: {e}")))?;
            buf
        }
    };
    if !input.no_trim {
        if data.last() == Some(&b'\n') {
            data.pop();
            if data.last() == Some(&b'\r') {
                data.pop();
            }
        }
    }
    Ok(data)
}

#[derive(Serialize)]
struct RatOut {
    num: u64,
    den: u64,
}

fn rat(r: ExactRational) -> RatOut {
    RatOut {
        num: r.num(),
        den: r.den(),
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WitnessOut {
    positions: Vec<usize>,
    string: String,
    min_period: usize,
    max_exponent: RatOut,
    domain_exponent: RatOut,
}

#[derive(Serialize)]
struct RecordOut<'a> {
    mode: &'a str,
    n: usize,
    length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WitnessOut>,
}

#[derive(Serialize)]
struct AnalyzeOut<'a> {
    n: usize,
    periods: &'a [usize],
    exponents: Vec<RatOut>,
    class: &'static str,
}

fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Prints one find/oracle record; both share this shape so their outputs can
/// be diffed directly.
fn print_record(mode: Mode, n: usize, answer: &Answer, format: Format) {
    match format {
        Format::Json => {
            let witness = answer.witness.as_ref().map(|w| WitnessOut {
                positions: w.positions.clone(),
                string: String::from_utf8_lossy(&w.content).into_owned(),
                min_period: w.min_period,
                max_exponent: rat(w.max_exponent),
                domain_exponent: rat(w.domain_exponent),
            });
            let record = RecordOut {
                mode: mode.token(),
                n,
                length: answer.length,
                witness,
            };
            println!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
        Format::Text => {
            println!("length {}", answer.length);
            if let Some(w) = &answer.witness {
                println!("positions {}", join(&w.positions));
                println!("string {}", String::from_utf8_lossy(&w.content));
                println!("minPeriod {}", w.min_period);
                println!("maxExponent {}", w.max_exponent);
                println!("domainExponent {}", w.domain_exponent);
            }
        }
    }
}

fn run_find(args: FindArgs) -> Result<(), CliError> {
    install_thread_cap()?;
    let limits = match args.max_n {
        Some(m) => Limits { d2: m, d3: m, d4: m },
        None => Limits::default(),
    };
    let opts = DriverOptions {
        reconstruct: args.witness,
        limits,
        gate: if args.paper_literal {
            D2Gate::Diagonal
        } else {
            D2Gate::Above
        },
    };
    let text = read_input(&args.input)?;
    let mode = args.mode.mode();
    let answer = run_mode(mode, &text, &opts).map_err(|e| match e {
        CoreError::LimitExceeded { .. } => CliError::Guard(format!("{e} (raise with --max-n)")),
        other => CliError::Usage(other.to_string()),
    })?;
    print_record(mode, text.len(), &answer, args.format);
    Ok(())
}

fn run_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let text = read_input(&args.input)?;
    let profile =
        PeriodProfile::compute(&text).map_err(|e| CliError::Usage(e.to_string()))?;
    let class = classify(&text).expect("text is non-empty here").token();
    match args.format {
        Format::Json => {
            let record = AnalyzeOut {
                n: profile.length,
                periods: &profile.periods,
                exponents: profile.exponents.iter().copied().map(rat).collect(),
                class,
            };
            println!("{}", serde_json::to_string(&record).expect("record serializes"));
        }
        Format::Text => {
            println!("n {}", profile.length);
            println!("periods {}", join(&profile.periods));
            println!("exponents {}", join(&profile.exponents));
            println!("class {class}");
        }
    }
    Ok(())
}

fn run_oracle(args: OracleArgs) -> Result<(), CliError> {
    install_thread_cap()?;
    let limit = args.limit.unwrap_or(ORACLE_MAX_LEN);
    if limit > ORACLE_MAX_LEN {
        return Err(CliError::Usage(format!(
            "--limit may only lower the oracle cap of {ORACLE_MAX_LEN}, got {limit}"
        )));
    }
    let text = read_input(&args.input)?;
    if text.len() > limit {
        let err = CoreError::LimitExceeded {
            guard: "oracle",
            limit,
            len: text.len(),
        };
        return Err(CliError::Guard(err.to_string()));
    }
    let mode = args.mode.mode();
    let result =
        oracle_longest(&text, mode.domain()).map_err(|e| CliError::Guard(e.to_string()))?;
    let answer = Answer {
        length: result.length,
        witness: None,
    };
    print_record(mode, text.len(), &answer, args.format);
    Ok(())
}

fn parse_sizes(raw: &str) -> Result<Vec<usize>, CliError> {
    raw.split(',')
        .map(|token| {
            token.trim().parse::<usize>().map_err(|_| {
                CliError::Usage(format!("--sizes expects comma-separated integers, got {token:?}"))
            })
        })
        .collect()
}

fn run_bench(args: BenchArgs) -> Result<(), CliError> {
    let sizes = parse_sizes(&args.sizes)?;
    let threads = thread_override()?.unwrap_or(1);
    let cfg = ScalingConfig {
        mode: args.mode.mode(),
        sizes,
        sigma: args.alphabet,
        seed: args.seed,
        reps: args.reps,
        threads,
    };
    let report = run_scaling(&cfg).map_err(|e| match e {
        BenchError::Core(core @ CoreError::LimitExceeded { .. }) => {
            CliError::Guard(core.to_string())
        }
        other => CliError::Usage(other.to_string()),
    })?;
    let mut file = fs::File::create(&args.out)
        .map_err(|e| CliError::Io(format!("cannot create {}: {e}", args.out.display())))?;
    write_csv(&report, &mut file)
        .map_err(|e| CliError::Io(format!("cannot write {}: {e}", args.out.display())))?;
    println!("slope {:.3}", report.slope);
    Ok(())
}
