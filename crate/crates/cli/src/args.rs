use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Parser)]
#[command(
    name = "latticeprop",
    version,
    about = "Sp(2) transfer matrices: decomposition, powers and crystal spectra"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write results here instead of stdout.
    #[arg(short, long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Unimodularity tolerance on |det - 1|.
    #[arg(long = "eps-det", global = true, value_name = "EPS")]
    pub eps_det: Option<f64>,

    /// Half-width of the parabolic band on ||half-trace| - 1|.
    #[arg(long = "eps-parab", global = true, value_name = "EPS")]
    pub eps_parab: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Bargmann and Wigner decompositions of one matrix.
    Decompose(MatrixInput),
    /// N-th power through the closed form.
    Power(PowerArgs),
    /// N-period transmission spectrum of a crystal config.
    Transmit(SpectrumArgs),
    /// Band classification of a crystal config.
    Bands(SpectrumArgs),
    /// Time closed-form against repeated multiplication.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct MatrixInput {
    /// Four reals, row-major. May be given as one quoted string.
    #[arg(value_name = "ENTRIES", allow_negative_numbers = true, num_args = 0..)]
    pub entries: Vec<String>,

    /// Read the four entries from a file.
    #[arg(short, long, value_name = "PATH", conflicts_with = "entries")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct PowerArgs {
    #[command(flatten)]
    pub matrix: MatrixInput,

    #[arg(long = "N", value_name = "N", default_value_t = 1)]
    pub n: u64,

    /// Also run the Chebyshev recurrence and report the deviation.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    /// Crystal config (json).
    #[arg(short, long, value_name = "PATH")]
    pub input: PathBuf,

    /// Override the period count of the config.
    #[arg(long = "N", value_name = "N")]
    pub n: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Period counts, comma separated.
    #[arg(long = "N", value_name = "N,...", value_delimiter = ',', num_args = 0..,
          default_values_t = [1_000_u64, 1_000_000, 1_000_000_000])]
    pub n: Vec<u64>,

    #[arg(long, default_value_t = 7)]
    pub seed: u64,

    /// Timing repeats per method and N (at least 5).
    #[arg(long, default_value_t = 5)]
    pub repeats: usize,

    /// Skip timing and report only the correctness part.
    #[arg(long = "no-timings")]
    pub no_timings: bool,
}
