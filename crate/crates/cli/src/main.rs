mod args;
mod commands;
mod report;

use std::process::ExitCode;

use clap::Parser;
use fullerene_core::Error;

use args::Cli;

/// 2 for bad input or domain errors, 3 for I/O, 4 for resource limits.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Io { .. } | Error::Csv(_) => 3,
        Error::ResourceLimit { .. } => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("fullerene: cannot set up {threads} threads: {e}");
            return ExitCode::from(4);
        }
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fullerene: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
