use std::process::ExitCode;

use clap::Parser;
use evohab::cli::{run, Cli};

fn main() -> ExitCode {
    run(Cli::parse()).into()
}
