use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use gammaspin::cli::{run, Cli};
use gammaspin::PhysicalConstants;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli, &PhysicalConstants::codata2018()) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.stdout.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            if outcome.exit_code != 0 {
                eprintln!("conservation violated");
            }
            ExitCode::from(outcome.exit_code)
        }
        Err(e) => {
            eprintln!("gammaspin: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
