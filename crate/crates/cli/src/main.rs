use std::process::ExitCode;

use clap::Parser;
use pagefold_cli::{run, Cli};

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pagefold: {e}");
            e.into()
        }
    }
}
