mod args;
mod commands;
mod output;
mod repsource;

use std::process;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            process::exit(code);
        }
    };
    let result = match &cli.command {
        Command::Validate(c) => commands::validate::run(c),
        Command::Analyze(c) => commands::analyze::run(c),
        Command::Decompose(d) => commands::decompose::run(d),
        Command::Search(s) => commands::search::run(s),
        Command::Chartable(c) => commands::chartable::run(c),
    };
    if let Err(f) = result {
        eprintln!("error: {}", f.message());
        process::exit(f.exit_code());
    }
}
