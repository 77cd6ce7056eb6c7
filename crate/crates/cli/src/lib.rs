//! Command-line front end for `latticeprop`.
//!
//! Each subcommand renders a complete document into a `String`; the binary
//! only decides where it goes and which exit code to use.

pub mod args;
pub mod commands;
pub mod config;
pub mod error;
pub mod render;

use latticeprop::Tolerances;

pub use args::{Cli, Command, Format};
pub use commands::bench::{run_bench, BenchEntry, BenchOptions, BenchReport};
pub use error::{CliError, ExitStatus};

/// Environment variable capping scan parallelism; `0` or unset means one
/// worker per core.
pub const THREADS_ENV: &str = "LATTICEPROP_THREADS";

/// A rendered result. `failure` is set when the command ran but a
/// verification check did not hold; the document is still emitted.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub body: String,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self {
            body,
            failure: None,
        }
    }

    pub fn status(&self) -> ExitStatus {
        if self.failure.is_some() {
            ExitStatus::Verification
        } else {
            ExitStatus::Success
        }
    }
}

pub fn tolerances(cli: &Cli) -> Result<Tolerances, CliError> {
    let mut tol = Tolerances::default();
    for (name, value, slot) in [
        ("--eps-det", cli.eps_det, &mut tol.det),
        ("--eps-parab", cli.eps_parab, &mut tol.parabolic),
    ] {
        if let Some(v) = value {
            if !(v.is_finite() && v > 0.0) {
                return Err(CliError::input(format!(
                    "{name} must be a positive number, got {v}"
                )));
            }
            *slot = v;
        }
    }
    Ok(tol)
}

fn thread_pool() -> Result<rayon::ThreadPool, CliError> {
    let threads = match std::env::var(THREADS_ENV) {
        Ok(s) => s.trim().parse::<usize>().map_err(|_| {
            CliError::input(format!(
                "{THREADS_ENV} must be a non-negative integer, got {s:?}"
            ))
        })?,
        Err(_) => 0,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::input(format!("cannot start worker pool: {e}")))
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let tol = tolerances(cli)?;
    match &cli.command {
        Command::Decompose(input) => {
            let m = commands::read_matrix(input)?;
            commands::decompose::run(&m, cli.format.unwrap_or(Format::Json), &tol).map(Outcome::ok)
        }
        Command::Power(args) => {
            commands::power::run(args, cli.format.unwrap_or(Format::Json), &tol)
        }
        Command::Transmit(args) | Command::Bands(args) => {
            let bands = matches!(cli.command, Command::Bands(_));
            let config = config::load(&args.input, args.n)?;
            let pool = thread_pool()?;
            let format = cli.format.unwrap_or(Format::Csv);
            pool.install(|| commands::spectrum::run(&config, bands, format, &tol))
                .map(Outcome::ok)
        }
        Command::Bench(args) => commands::bench::run(args, cli.format.unwrap_or(Format::Json)),
    }
}
