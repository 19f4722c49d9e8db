use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fibwords::cli::{run, RunConfig, EXIT_DOMAIN};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    match run(&config) {
        Ok(outcome) => {
            let written = match &config.out {
                Some(path) => std::fs::write(path, &outcome.report),
                None => std::io::stdout().lock().write_all(outcome.report.as_bytes()),
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_DOMAIN as u8);
            }
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.status() as u8)
        }
    }
}
