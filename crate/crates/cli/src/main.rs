mod args;
mod commands;
mod render;

use std::process::ExitCode;

use clap::Parser;
use homlie::io::to_json_pretty;

use crate::args::Cli;

const EXIT_FAILS: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let report = match commands::run(&cli.command) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let text = if cli.json {
        to_json_pretty(&report) + "\n"
    } else {
        render::human(&report)
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(EXIT_USAGE);
            }
        }
        None => print!("{text}"),
    }
    if report.verdict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILS)
    }
}
