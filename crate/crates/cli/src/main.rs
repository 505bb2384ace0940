mod args;
mod commands;
mod failure;
mod formats;

use std::process::ExitCode;

use clap::Parser;

fn main() -> ExitCode {
    let cli = args::Cli::parse();
    match commands::run(cli.command, &cli.global) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let kind = match f {
                failure::Failure::Usage(_) => "error",
                failure::Failure::Violation(_) => "violation",
                failure::Failure::Resource(_) => "resource limit",
            };
            eprintln!("{kind}: {f}");
            f.code()
        }
    }
}
