use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hensel_cli::{run, Options};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Command {
    Polygon,
    Lift,
    Special,
    Chain,
    Extval,
    Charpoly,
    Validate,
    Decide,
    Verify,
    Fuzz,
}

/// Exact Newton polygons, Hensel lifting and certified kernel decisions.
/// Reads one JSON request and writes one JSON response.
#[derive(Debug, Parser)]
#[command(name = "hensel", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    /// Read the request from FILE instead of stdin.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
    /// Write the response to FILE instead of stdout.
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
    /// Working precision (lift, special, chain) or initial precision.
    #[arg(long, value_name = "N")]
    precision: Option<u32>,
    #[arg(long, value_name = "N")]
    max_precision: Option<u32>,
    /// Include the proof-step trace in the response.
    #[arg(long)]
    trace: bool,
    /// Seed for `fuzz`.
    #[arg(long, value_name = "S")]
    seed: Option<u64>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut input = String::new();
    let read = match &cli.input {
        Some(path) => fs::read_to_string(path).map(|s| input = s),
        None => io::stdin().read_to_string(&mut input).map(|_| ()),
    };
    if let Err(e) = read {
        eprintln!("hensel: cannot read request: {e}");
        return ExitCode::from(3);
    }
    let command = cli.command.to_possible_value().expect("no skipped variants");
    let options = Options { precision: cli.precision, max_precision: cli.max_precision, trace: cli.trace, seed: cli.seed };
    let response = run(command.get_name(), &input, &options);
    let text = response.to_json();
    let written = match &cli.output {
        Some(path) => fs::write(path, &text),
        None => io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("hensel: cannot write response: {e}");
        return ExitCode::from(3);
    }
    if let Some(e) = &response.error {
        eprintln!("hensel: {e}");
    }
    ExitCode::from(response.exit_code() as u8)
}
