use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use latticeprop_cli::{run, Cli, CliError};

fn emit(cli: &Cli, body: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "stdout".into(),
                    source,
                })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match run(&cli).and_then(|outcome| emit(&cli, &outcome.body).map(|_| outcome)) {
        Ok(outcome) => {
            if let Some(msg) = &outcome.failure {
                eprintln!("latticeprop: verification failed: {msg}");
            }
            outcome.status()
        }
        Err(e) => {
            eprintln!("latticeprop: {e}");
            e.status()
        }
    };
    ExitCode::from(status.code() as u8)
}
