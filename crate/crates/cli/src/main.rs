//! `outersix`: reproduces the counts and constructions behind the outer
//! automorphism of Sym(6) and reports whether each claim holds.
//!
//! Exit status: 0 when every claim holds, 1 when one fails, 2 on a usage
//! error.

mod commands;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use outersix::Error;

use commands::{IcosaEmit, K6Emit, K6Format, Output};

#[derive(Parser)]
#[command(name = "outersix", version, about = "Verify the exceptional outer automorphism of Sym(6)")]
struct Cli {
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Involution classes of Sym(n) with sizes checked against enumeration.
    Classes {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=8))]
        n: u8,
    },
    /// Maximal sets of pairwise non-commuting transpositions closed under
    /// the dependent closure.
    Lemma1 {
        #[arg(long, value_parser = clap::value_parser!(u8).range(3..=7))]
        n: u8,
    },
    /// Product-order spectra of every involution class up to degree n-max.
    Lemma2 {
        #[arg(long = "n-max", value_parser = clap::value_parser!(u8).range(2..=11))]
        n_max: u8,
    },
    /// Exhaustive automorphism search for Sym(n).
    Aut {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=6))]
        n: u8,
    },
    /// The icosahedral construction of the outer automorphism.
    Icosa {
        #[arg(long, value_enum)]
        emit: IcosaEmit,
        /// Model tables (JSON) to use instead of the built-in icosahedron.
        #[arg(long, value_name = "PATH")]
        model: Option<PathBuf>,
    },
    /// Edges, one-factors and one-factorizations of K6, the doily and the
    /// Tutte 8-cage.
    K6 {
        #[arg(long, value_enum)]
        emit: K6Emit,
        #[arg(long, value_enum, default_value = "text")]
        format: K6Format,
    },
    /// Run every check.
    VerifyAll {
        /// Model tables (JSON) to use instead of the built-in icosahedron.
        #[arg(long, value_name = "PATH")]
        model: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Claim(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::OutOfRange { .. } | Error::Parse { .. } | Error::Precondition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Claim(e.to_string()),
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let out = match &cli.command {
        Command::Classes { n } => Output::Report(commands::classes(*n as usize)?),
        Command::Lemma1 { n } => Output::Report(commands::lemma1(*n as usize)?),
        Command::Lemma2 { n_max } => Output::Report(commands::lemma2(*n_max as usize)?),
        Command::Aut { n } => Output::Report(commands::aut(*n as usize)?),
        Command::Icosa { emit, model } => {
            let tables = commands::load_tables(model.as_deref()).map_err(Failure::Usage)?;
            Output::Report(commands::icosa(*emit, &tables, model.as_deref())?)
        }
        Command::K6 { emit, format } => {
            if cli.json && *format == K6Format::Dot {
                return Err(Failure::Usage("--json conflicts with --format dot".into()));
            }
            commands::k6(*emit, *format)?
        }
        Command::VerifyAll { model } => {
            let tables = commands::load_tables(model.as_deref()).map_err(Failure::Usage)?;
            Output::Report(commands::verify_all(&tables, model.as_deref()))
        }
    };
    Ok(out)
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let output = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Claim(msg)) => {
            eprintln!("FAIL: {msg}");
            return ExitCode::from(1);
        }
    };
    let (text, mut report) = match output {
        Output::Raw(text, r) => (text, r),
        Output::Report(r) => {
            let json = cli.json || matches!(cli.command, Command::K6 { format: K6Format::Json, .. });
            let text = if json { r.to_json() } else { r.to_text() };
            (text, r)
        }
    };
    report.wall_time = start.elapsed();
    if let Err(e) = emit(&cli, &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    let status = if report.passed { "PASS" } else { "FAIL" };
    eprintln!("{} {status} in {:.2?}", report.command, report.wall_time);
    if !report.passed {
        for l in report.text.iter().filter(|l| l.starts_with("[FAILED]")) {
            eprintln!("  {l}");
        }
    }
    ExitCode::from(if report.passed { 0 } else { 1 })
}
