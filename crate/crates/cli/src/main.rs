//! `locchrom`: generate graphs, build corona products, compute and certify
//! locating-chromatic numbers.
//!
//! Exit codes: 0 resolved/valid, 1 invalid coloring, 2 indeterminate
//! (budget exhausted), 64 usage or bad input, 74 I/O, 70 internal error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_INDETERMINATE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_SOFTWARE: u8 = 70;
pub const EXIT_IO: u8 = 74;

#[derive(Debug, Parser)]
#[command(
    name = "locchrom",
    version,
    about = "Locating-chromatic numbers of graphs and corona products"
)]
pub struct Cli {
    /// Output format for results on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,

    /// Search-node budget per exact computation.
    #[arg(long, global = true, default_value_t = locchrom_core::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,

    /// Seed for random graph generation.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a graph from a named family as an edge list.
    ///
    /// Families: path N, cycle N, star N, complete N, empty N,
    /// double_star A B, random N P (connected, uses --seed).
    Gen { family: String, params: Vec<String> },
    /// Build the corona product of two graph files.
    Corona {
        g: PathBuf,
        h: PathBuf,
        /// Also write the vertex provenance map as JSON to this path.
        #[arg(long)]
        map_out: Option<PathBuf>,
    },
    /// Compute the locating-chromatic number with a certificate.
    Chil { graph: PathBuf },
    /// Check whether a coloring is locating.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Lower and upper bounds for the corona product of G and H.
    Bounds { g: PathBuf, h: PathBuf },
    /// Emit a certified construction: `theorem2`, `star N` or
    /// `empty-corona N K` (host path on N vertices, K pendants per vertex).
    Fixture {
        name: String,
        params: Vec<usize>,
        /// Also write the bundle's pieces as separate files into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("locchrom: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
