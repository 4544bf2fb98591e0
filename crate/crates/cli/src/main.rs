use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use hopfcheck::suites::{self, Options, DEFAULT_MAX_DIM, SUITES};
use hopfcheck::{Error, Report, Result};

#[derive(Parser)]
#[command(name = "hopfcheck", version, about = "Exact checks for finite-dimensional Hopf algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Seed for every randomized routine.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest intermediate dimension a computation may build.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_DIM)]
    max_dim: usize,
    /// Also write the report (or, for `double`, the algebra) to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf axioms of a file or builtin.
    Validate { target: String },
    /// Structural summary of a Hopf algebra.
    Report { target: String },
    /// Build the Drinfeld double with its R-matrix.
    Double { target: String },
    /// Run a named check suite.
    Check {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        target: String,
    },
}

fn run(cli: &Cli) -> (String, String, Result<Report>) {
    let opts = Options { seed: cli.seed, max_dim: cli.max_dim };
    match &cli.command {
        Command::Validate { target } => ("validate".into(), target.clone(), suites::validate(target, &opts)),
        Command::Report { target } => ("report".into(), target.clone(), suites::structure_report(target, &opts)),
        Command::Double { target } => {
            let outcome = suites::double_document(target, &opts).and_then(|(json, report)| {
                match &cli.out {
                    Some(path) => std::fs::write(path, json).map_err(|e| Error::Io(e.to_string()))?,
                    None => return Err(Error::InvalidInput("double needs --out <path>".into())),
                }
                Ok(report)
            });
            ("double".into(), target.clone(), outcome)
        }
        Command::Check { suite, target } => (suite.clone(), target.clone(), suites::run_suite(suite, target, &opts)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (name, target, outcome) = run(&cli);
    let code = suites::exit_code(&outcome);
    let report = match &outcome {
        Ok(r) => r.clone(),
        Err(e) => suites::error_report(&name, &target, e),
    };
    let json = report.to_json();
    match cli.format {
        Format::Json => println!("{json}"),
        Format::Text => println!("{}", report.summary()),
    }
    if let (Some(path), false) = (&cli.out, matches!(cli.command, Command::Double { .. })) {
        if let Err(e) = std::fs::write(path, &json) {
            eprintln!("cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    eprintln!("{}", report.summary());
    eprintln!("{name} {target}: exit {code} in {:.2?}", start.elapsed());
    ExitCode::from(code as u8)
}
