use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "g2crystal", version, about = "Perfect crystals of type G2^(1): construction, checks and exports")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct LevelArg {
    /// The level `l` of `B^l`.
    #[arg(long)]
    level: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension sums of B^l and the matching model count.
    Dims {
        #[arg(long, default_value_t = 8)]
        max_level: u32,
    },
    /// List the elements of B^l with their weights and string lengths.
    Enumerate(LevelArg),
    /// Export the crystal graph of B^l.
    Graph(LevelArg),
    /// Check the construction and perfectness for levels 1..=L.
    Verify(LevelArg),
    /// List the minimal elements of B^l.
    Minimal(LevelArg),
    /// Dump the bijection from the model to the tableaux.
    Phi(LevelArg),
    /// Count components of B^l and of B^l (x) B^l.
    Connectivity(LevelArg),
    /// Run the exact checks on the level-one module.
    Qcheck {
        /// Also write the full report as JSON to this file.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
}

/// Rendered output and whether every check in it passed.
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

fn run(cli: &Cli) -> Result<Outcome> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Graph(_)) {
        bail!(UsageError("--format dot is only available for graph".into()));
    }
    match &cli.command {
        Command::Dims { max_level } => commands::dims(*max_level, cli.format),
        Command::Enumerate(a) => commands::enumerate(a.level, cli.format),
        Command::Graph(a) => commands::graph(a.level, cli.format),
        Command::Verify(a) => commands::verify(a.level, cli.format),
        Command::Minimal(a) => commands::minimal(a.level, cli.format),
        Command::Phi(a) => commands::phi(a.level, cli.format),
        Command::Connectivity(a) => commands::connectivity(a.level, cli.format),
        Command::Qcheck { dump } => commands::qcheck(cli.format, dump.as_deref()),
    }
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut s = io::stdout().lock();
            s.write_all(text.as_bytes())?;
            s.flush()?;
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli).and_then(|o| emit(cli.out.as_ref(), &o.text).map(|_| o.passed)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if e.is::<UsageError>() => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
