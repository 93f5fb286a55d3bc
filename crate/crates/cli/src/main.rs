use std::process::ExitCode;

use clap::Parser;
use zdiff_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("zdiff: {e}");
            e.exit_code()
        }
    }
}
