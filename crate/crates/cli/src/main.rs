//! `wahlrank`: batch rank computations and criterion evaluation.
//!
//! Exit codes: 0 success, 1 a computation contradicts a prediction,
//! 2 invalid input.

mod args;
mod criteria;
mod output;
mod p1;
mod plane;

use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command};
use output::{emit, InputError};

const THREADS_VAR: &str = "WAHLRANK_THREADS";

fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .parse()
        .map_err(|e| InputError(format!("{THREADS_VAR}={raw:?}: {e}")))?;
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    configure_threads()?;
    match cli.command {
        Command::Plane(a) => {
            let reports = plane::run(&a)?;
            emit(&reports, a.format, a.output.as_deref())?;
            Ok(if plane::all_match(&reports) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::P1(a) => {
            let reports = p1::run(&a);
            emit(&reports, a.format, a.output.as_deref())?;
            Ok(if reports.iter().all(|r| r.agree) { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Criteria(c) => {
            let answer = criteria::run(&c)?;
            println!("{}", serde_json::to_string(&answer)?);
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<InputError>().is_some() {
        return 2;
    }
    match e.downcast_ref::<wahlrank_core::Error>() {
        Some(core) if !core.is_input_error() => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
