use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use ccalc::commands::{run_command, RunOptions, COMMANDS};
use ccalc::config::load_config;
use ccalc::poly::DescentGuard;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Exact families Seiberg-Witten calculator.
///
/// Exit status: 0 on success, 1 when a verification fails, 2 on usage or
/// contract errors.
#[derive(Parser, Debug)]
#[command(name = "ccalc", version)]
struct Cli {
    /// verify | pushforward | localize | degree | connect-sum | bk-check
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(COMMANDS))]
    command: String,
    /// JSON configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Power of x (or SW index) to evaluate, overriding the config.
    #[arg(long)]
    m: Option<u32>,
    /// Randomized cases per suite for `verify`.
    #[arg(long)]
    cases: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions {
        m: cli.m,
        cases: cli.cases,
        seed: cli.seed,
    };
    let report = DescentGuard::env_limit()
        .and_then(|_| load_config(&cli.config))
        .and_then(|cfg| run_command(&cfg, &cli.command, &opts));
    match report {
        Ok(r) => {
            match cli.format {
                Format::Text => print!("{}", r.to_text()),
                Format::Json => println!("{}", r.to_json()),
            }
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
