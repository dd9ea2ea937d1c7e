use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod output;
mod svg;

use output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "skewband",
    version,
    about = "Exact nullities of skew-symmetric Toeplitz band matrices"
)]
struct Cli {
    /// Output format. `svg` is accepted only by `linegraph`.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Directory holding per-k apex tables.
    #[arg(long, global = true, default_value = ".cache")]
    cache_dir: PathBuf,

    /// Worker threads for sweeps (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Write output here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// N(n,k) by one or all methods.
    Nullity(commands::nullity::Args),
    /// The points (n, N(n,k)) over a range, default one full period.
    Linegraph(commands::linegraph::Args),
    /// All apexes (q, j, eta, f) for k; refreshes the cache file.
    Apexes(commands::apexes::Args),
    /// Exact and asymptotic counts of each nullity value over a period.
    Stats(commands::stats::Args),
    /// Cross-check engines and structural properties for k <= k-max.
    Verify(commands::verify::Args),
    /// Compare the order of vanishing of det A(n,k,x) at 0 with N(n,k).
    Conjecture(commands::conjecture::Args),
}

/// Everything a subcommand needs besides its own arguments.
pub struct Context {
    pub format: Format,
    pub cache_dir: PathBuf,
    pub output: Option<PathBuf>,
}

/// Outcome of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    /// Results were produced but something disagreed.
    Mismatch,
}

fn run(cli: Cli) -> anyhow::Result<Outcome> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global()?;
    }
    let ctx = Context {
        format: cli.format,
        cache_dir: cli.cache_dir,
        output: cli.output,
    };
    match cli.command {
        Command::Nullity(a) => commands::nullity::run(&ctx, a),
        Command::Linegraph(a) => commands::linegraph::run(&ctx, a),
        Command::Apexes(a) => commands::apexes::run(&ctx, a),
        Command::Stats(a) => commands::stats::run(&ctx, a),
        Command::Verify(a) => commands::verify::run(&ctx, a),
        Command::Conjecture(a) => commands::conjecture::run(&ctx, a),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
