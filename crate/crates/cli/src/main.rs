mod args;
mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;

use crate::args::Cli;
use crate::commands::Status;
use crate::input::InputError;

fn exit_code(err: &anyhow::Error) -> u8 {
    let invalid_input = err
        .chain()
        .any(|e| e.is::<InputError>() || e.is::<tridist_core::Error>());
    if invalid_input {
        2
    } else {
        1
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.into()).build_global() {
            eprintln!("tridist: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(cli.command) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerificationFailed) => ExitCode::from(1),
        Err(err) => {
            eprintln!("tridist: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
