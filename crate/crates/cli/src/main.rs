use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use weberchain::{
    build_chain, compute_threshold, detect_extension, minimize_on_axis, solve_weber, SolveConfig,
};
use weberchain_cli::{render_json, render_table, table_rows, CliError, PointFile};

/// Weber points of regular polygonal chains and reflection-symmetric point sets.
#[derive(Parser, Debug)]
#[command(name = "weberchain", version, about)]
struct Cli {
    /// Print full double precision instead of 6 significant figures.
    #[arg(long, global = true)]
    precise: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solve one chain C_n(k) along its symmetry axis.
    Chain {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// CSV table `n,psi,x` for n = k..=n_max.
    Table {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Smallest n for which the Weber point of C_n(k) is the root vertex (odd k).
    Nk {
        #[arg(long)]
        k: usize,
    },
    /// Weber point of the points in FILE.
    Solve { file: PathBuf },
    /// Test whether the points in FILE extend a reflection-symmetric set.
    Detect { file: PathBuf },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let precise = cli.precise;
    Ok(match cli.command {
        Command::Chain { n, k } => render_json(&minimize_on_axis(&build_chain(n, k)?), precise),
        Command::Table { k, n_max } => render_table(&table_rows(k, n_max)?, precise),
        Command::Nk { k } => render_json(&compute_threshold(k)?, precise),
        Command::Solve { file } => {
            let pts = PointFile::read(&file)?.points;
            render_json(&solve_weber(&pts, &SolveConfig::default())?, precise)
        }
        Command::Detect { file } => {
            let pts = PointFile::read(&file)?.points;
            render_json(&detect_extension(&pts)?, precise)
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            if !out.ends_with('\n') {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
