use std::process::ExitCode;

use clap::Parser;
use symvoa_cli::{exit_status, run, Cli, Failure};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli);
    match &result {
        Ok(report) => print!("{}", report.body),
        Err(Failure::Usage(msg)) => eprintln!("error: {msg}"),
        Err(Failure::Verification(msg)) => eprintln!("verification error: {msg}"),
    }
    ExitCode::from(exit_status(&result))
}
