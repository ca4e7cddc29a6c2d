mod args;
mod commands;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use args::{Cli, Command};
use commands::Failure;

const SCHEMA: &str = "pairflip/1";

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };

    let (verb, outcome) = match &cli.command {
        Command::Tower(a) => ("tower", commands::tower_cmd(a)),
        Command::Classify(a) => ("classify", commands::classify_cmd(a)),
        Command::Slope(a) => ("slope", commands::slope_cmd(a)),
        Command::Flip(a) => ("flip", commands::flip_cmd(a)),
        Command::Lct(a) => ("lct", commands::lct_cmd(a)),
        Command::Disc(a) => ("disc", commands::disc_cmd(a)),
        Command::Hankel(a) => ("hankel", commands::hankel_cmd(a)),
        Command::Split(a) => ("split", commands::split_cmd(a)),
        Command::Multiplicity(a) => ("multiplicity", commands::multiplicity_cmd(a, cli.seed)),
    };

    match outcome {
        Ok(out) if cli.json => {
            let doc = json!({ "schema": SCHEMA, "command": verb, "result": out.value });
            let text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
            emit(&format!("{text}\n"));
            ExitCode::SUCCESS
        }
        Ok(out) => {
            emit(&out.text);
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

/// Write to stdout, tolerating a closed pipe (`pairflip ... | head`).
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}
