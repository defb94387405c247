//! `zcp`: command-line front end for the ZCP library.
//!
//! Exit codes: 0 when everything printed was verified, 1 when a verification
//! failed, 2 on invalid input, 3 when a search budget ran out.

mod args;
mod commands;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Status;

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("ZCP_THREADS") else {
        return Ok(());
    };
    let n: usize = value.parse().map_err(|_| format!("ZCP_THREADS must be a positive integer, got {value:?}"))?;
    if n == 0 {
        return Err("ZCP_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let format = cli.format();
    let outcome = match &cli.command {
        Command::Gen { construction } => commands::gen(construction, format),
        Command::Analyze { first, second, zcz_type } => commands::analyze(first, second, *zcz_type, format),
        Command::Search(a) => commands::search(a, format),
        Command::Pmepr(a) => commands::pmepr(a, format),
        Command::Table(a) => commands::table(a, format),
        Command::Check { rng_seed, cases } => commands::check(*rng_seed, *cases, format),
    };
    match outcome {
        Ok(Status::Verified) => ExitCode::SUCCESS,
        Ok(Status::Failed) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Ok(Status::Incomplete) => ExitCode::from(3),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
