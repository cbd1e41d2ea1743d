//! `mics`: reports on root systems, abelian ideals and minimal inversion
//! complete sets.
//!
//! Exit codes: 0 success, 1 a checked conjecture instance failed (or an
//! internal consistency check tripped), 2 bad input, 3 a valid request the
//! engine does not support.

mod render;
mod report;

use std::fmt;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mics_core::{CartanType, Labeling, RootSystem};
use serde::Serialize;

use render::Render;
use report::Selector;

#[derive(Parser)]
#[command(name = "mics", version, about = "Minimal inversion complete sets for abelian ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Positive roots, highest root, Coxeter number and Levi data.
    Show(SystemArgs),
    /// Abelian ideals with their fibres and the maximal ones.
    Ideals(SystemArgs),
    /// The canonical family F_α, or an F4 family with --f4.
    Mics(MicsArgs),
    /// Essential-set conjecture verdicts over a sweep of D and E types.
    Conjectures(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value = "pretty")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SystemArgs {
    #[arg(long = "type")]
    kind: CartanType,
    #[arg(long)]
    rank: RankSpec,
    #[arg(long, default_value = "vo")]
    labeling: Labeling,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct MicsArgs {
    #[command(flatten)]
    system: SystemArgs,
    /// Simple root index, 1-based.
    #[arg(long, required_unless_present = "f4", conflicts_with = "f4")]
    alpha: Option<usize>,
    /// Short and long simple roots `i,j` with i in {1,2}, j in {3,4}.
    #[arg(long)]
    f4: Option<Pair>,
}

#[derive(Args)]
struct SweepArgs {
    /// Restrict the sweep to one type; default D4..D10 and E6..E8.
    #[arg(long = "type")]
    kind: Option<CartanType>,
    #[arg(long, requires = "kind")]
    rank: Option<RankSpec>,
    #[arg(long, default_value = "vo")]
    labeling: Labeling,
    #[command(flatten)]
    output: OutputArgs,
}

/// `N` or an inclusive range `N..M`.
#[derive(Clone, Debug)]
struct RankSpec(RangeInclusive<usize>);

impl FromStr for RankSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("`{t}` is not a rank"))
        };
        let range = match s.split_once("..") {
            Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
            None => num(s)?..=num(s)?,
        };
        if range.is_empty() {
            return Err(format!("empty rank range `{s}`"));
        }
        Ok(RankSpec(range))
    }
}

impl RankSpec {
    fn single(&self) -> Result<usize, CliError> {
        if self.0.start() == self.0.end() {
            Ok(*self.0.start())
        } else {
            Err(CliError::Usage(
                "rank ranges are only accepted by `conjectures`".into(),
            ))
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Pair(usize, usize);

impl FromStr for Pair {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once(',').ok_or("expected `i,j`")?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
        Ok(Pair(parse(a)?, parse(b)?))
    }
}

#[derive(Debug)]
pub enum CliError {
    Core(mics_core::Error),
    Usage(String),
    Io(std::io::Error),
}

impl From<mics_core::Error> for CliError {
    fn from(e: mics_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "cannot write output: {e}"),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(mics_core::Error::Unsupported(_)) => 3,
            CliError::Core(mics_core::Error::Consistency(_)) => 1,
            _ => 2,
        }
    }
}

/// 1-based index from the command line to 0-based.
fn zero_based(k: usize, what: &str) -> Result<usize, CliError> {
    k.checked_sub(1)
        .ok_or_else(|| CliError::Usage(format!("{what} indices start at 1")))
}

fn emit<R: Serialize + Render>(report: &R, output: &OutputArgs) -> Result<(), CliError> {
    let text = match output.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Tsv => report.tsv(),
        Format::Pretty => report.pretty(),
    };
    match &output.out {
        Some(path) => std::fs::write(path, text).map_err(CliError::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn system(args: &SystemArgs) -> Result<RootSystem, CliError> {
    Ok(RootSystem::new(args.kind, args.rank.single()?, args.labeling)?)
}

fn sweep_systems(args: &SweepArgs) -> Result<Vec<RootSystem>, CliError> {
    let plan: Vec<(CartanType, RangeInclusive<usize>)> = match (args.kind, &args.rank) {
        (None, _) => vec![(CartanType::D, 4..=10), (CartanType::E, 6..=8)],
        (Some(k), Some(r)) => vec![(k, r.0.clone())],
        (Some(CartanType::D), None) => vec![(CartanType::D, 4..=10)],
        (Some(CartanType::E), None) => vec![(CartanType::E, 6..=8)],
        (Some(k), None) => {
            return Err(CliError::Usage(format!("--rank is required for type {k}")));
        }
    };
    let mut out = Vec::new();
    for (kind, ranks) in plan {
        for n in ranks {
            out.push(RootSystem::new(kind, n, args.labeling)?);
        }
    }
    Ok(out)
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("MICS_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("MICS_THREADS must be a positive integer, got `{raw}`")))?;
    // a second initialisation only happens in tests; ignore it
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    configure_threads()?;
    match cli.command {
        Command::Show(args) => emit(&report::show(&system(&args)?)?, &args.output)?,
        Command::Ideals(args) => emit(&report::ideals(&system(&args)?)?, &args.output)?,
        Command::Mics(args) => {
            let rs = system(&args.system)?;
            let selector = match (args.alpha, args.f4) {
                (_, Some(Pair(i, j))) => {
                    Selector::F4(zero_based(i, "--f4")?, zero_based(j, "--f4")?)
                }
                (Some(a), None) => Selector::Simple(zero_based(a, "--alpha")?),
                (None, None) => unreachable!("clap requires --alpha or --f4"),
            };
            emit(&report::mics(&rs, selector)?, &args.system.output)?;
        }
        Command::Conjectures(args) => {
            let report = report::conjectures(&sweep_systems(&args)?)?;
            emit(&report, &args.output)?;
            if !report.all_hold {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("mics: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
