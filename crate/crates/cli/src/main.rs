mod args;
mod commands;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = match cli.command {
        Command::Trace(a) => commands::trace(a),
        Command::Maxent(a) => commands::maxent(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Fit(a) => commands::fit(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qdent: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
