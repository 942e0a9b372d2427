use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ivtrnn::cli::{self, CliError, DisplayOptions, Format, ReproduceTable, WeightOverrides};
use ivtrnn::reference::Regime;

#[derive(Parser)]
#[command(name = "ivtrnn", version, about = "Interval-valued trapezoidal neutrosophic decision making")]
struct Args {
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Table)]
    format: FormatArg,
    /// Decimal places for table output (half-even rounding)
    #[arg(long, global = true)]
    precision: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Stated,
    Uniform025,
}

#[derive(clap::Args)]
struct WeightArgs {
    /// Comma-separated weights replacing those in the file
    #[arg(long, value_name = "W1,W2,...")]
    weights: Option<String>,
    /// Accept positive weights that do not sum to 1
    #[arg(long)]
    allow_unnormalized_weights: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Rank the alternatives of a problem file
    Rank {
        path: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Recompute the bundled example's combined numbers (table 4) or scores (table 5)
    Reproduce {
        #[arg(long, value_parser = clap::value_parser!(u8).range(4..=5))]
        table: u8,
        #[arg(long, value_enum, default_value_t = RegimeArg::Uniform025)]
        regime: RegimeArg,
    },
    /// Score and accuracy of one IVTrNN literal
    Score { path: PathBuf },
    /// Weighted average of a list of IVTrNN literals
    Agg {
        path: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
    },
    /// Check a problem file and report inclusion warnings
    Validate {
        path: PathBuf,
        #[command(flatten)]
        weights: WeightArgs,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn overrides(w: &WeightArgs) -> Result<WeightOverrides, CliError> {
    Ok(WeightOverrides {
        weights: w.weights.as_deref().map(cli::parse_weight_list).transpose()?,
        allow_unnormalized: w.allow_unnormalized_weights,
    })
}

fn run(args: Args) -> cli::CmdResult {
    let display = DisplayOptions {
        format: match args.format {
            FormatArg::Table => Format::Table,
            FormatArg::Json => Format::Json,
        },
        precision: args.precision,
    };
    match &args.command {
        Command::Rank { path, weights } => cli::cmd_rank(&read(path)?, &overrides(weights)?, display),
        Command::Reproduce { table, regime } => {
            let table = ReproduceTable::from_number(*table).ok_or_else(|| CliError::Parse(format!("no table {table}")))?;
            let regime = match regime {
                RegimeArg::Stated => Regime::Stated,
                RegimeArg::Uniform025 => Regime::Uniform025,
            };
            cli::cmd_reproduce(table, regime, display)
        }
        Command::Score { path } => cli::cmd_score(&read(path)?, display),
        Command::Agg { path, weights } => cli::cmd_agg(&read(path)?, &overrides(weights)?, display),
        Command::Validate { path, weights } => cli::cmd_validate(&read(path)?, &overrides(weights)?, display),
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(args) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
