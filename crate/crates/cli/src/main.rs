use std::process::ExitCode;

use clap::Parser;
use halfshift_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match halfshift_cli::run(cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("error: {e}");
            e.status.into()
        }
    }
}
