//! `wpb` — experiment harness and analysis front end.
//!
//! Subcommands: `evolve` runs seeded evolutionary searches and persists one
//! JSONL record per run plus a best-so-far trace CSV; `analyze` reports the
//! weightwise profile of a single truth table; `enumerate` prints the full
//! WPB census for small n as CSV; `spaces` prints search-space sizes;
//! `stats` aggregates result records into summary statistics.

mod evolve;
mod stats;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use wpb_core::{
    enumerate_wpb, restricted_bound, scientific, space_sizes, BooleanFunction, WeightClassIndex,
};

/// A usage problem exits with 1, a runtime failure with 2.
pub enum CliError {
    Usage(String),
    Runtime(String),
}

impl CliError {
    fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    fn runtime(msg: impl Into<String>) -> Self {
        CliError::Runtime(msg.into())
    }
}

impl From<wpb_core::Error> for CliError {
    fn from(e: wpb_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Runtime(e.to_string())
    }
}

#[derive(Parser)]
#[command(name = "wpb", version, about = "Weightwise perfectly balanced Boolean function toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run seeded evolutionary searches and record the results
    Evolve(evolve::EvolveArgs),
    /// Report weightwise balance and nonlinearity data for one truth table
    Analyze(AnalyzeArgs),
    /// Exhaustively enumerate the WPB functions of n in {2, 4} as CSV
    Enumerate(EnumerateArgs),
    /// Print search-space sizes, exact and in scientific notation
    Spaces(SpacesArgs),
    /// Aggregate JSONL result records into summary statistics
    Stats(stats::StatsArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Truth table, binary (2^n characters) or hexadecimal (2^n / 4)
    table: String,
    /// Number of variables
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Number of variables, 2 or 4
    #[arg(long)]
    n: usize,
}

#[derive(Args)]
struct SpacesArgs {
    /// Number of variables
    #[arg(long)]
    n: usize,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let outcome = match cli.command {
        Command::Evolve(args) => evolve::cmd_evolve(args),
        Command::Analyze(args) => cmd_analyze(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Spaces(args) => cmd_spaces(args),
        Command::Stats(args) => stats::cmd_stats(args),
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Accepts binary when the string length matches the table size, otherwise
/// expects hex.
fn parse_table(table: &str, n: usize) -> Result<BooleanFunction, CliError> {
    if !(2..=16).contains(&n) {
        return Err(CliError::usage(format!("n={n} out of the supported 2..=16")));
    }
    let f = if table.len() == 1 << n {
        BooleanFunction::from_binary_str(table)?
    } else {
        BooleanFunction::from_hex_str(table, n)?
    };
    Ok(f)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    let f = parse_table(&args.table, args.n)?;
    let n = f.n();
    let idx = WeightClassIndex::new(n);
    let anf = f.anf();

    println!("n: {n}");
    println!("truth table (hex): {}", f.to_hex_string());
    println!("weight: {} (balanced: {})", f.weight(), f.is_balanced());
    println!("nonlinearity: {}", f.nonlinearity());
    println!("pen: {}", f.penalty(&idx));
    println!("is_wpb: {}", f.is_wpb(&idx));
    println!("k size weight unb nl_k bound");
    for k in 1..n {
        println!(
            "{k} {} {} {} {} {}",
            idx.class_size(k),
            f.restricted_weight(k, &idx)?,
            f.unbalancedness(k, &idx)?,
            f.restricted_nonlinearity(k, &idx)?,
            restricted_bound(n, k)?,
        );
    }
    println!(
        "anf monomials: {}, algebraic degree: {}",
        anf.monomial_count(),
        anf.degree()
    );
    Ok(())
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let census = enumerate_wpb(args.n)?;
    print!("{}", census.to_csv());
    Ok(())
}

fn cmd_spaces(args: SpacesArgs) -> Result<(), CliError> {
    if !(1..=16).contains(&args.n) {
        return Err(CliError::usage(format!(
            "n={} out of the supported 1..=16",
            args.n
        )));
    }
    let sizes = space_sizes(args.n);
    println!("n: {}", args.n);
    println!("all:      {} ({})", sizes.all, scientific(&sizes.all));
    println!(
        "balanced: {} ({})",
        sizes.balanced,
        scientific(&sizes.balanced)
    );
    match &sizes.wpb {
        Some(wpb) => println!("wpb:      {} ({})", wpb, scientific(wpb)),
        None => println!("wpb:      infeasible (n is not a power of two)"),
    }
    Ok(())
}

/// Master seed: the `WPB_SEED` environment variable wins over the flag.
pub fn master_seed(flag: u64) -> Result<u64, CliError> {
    match std::env::var("WPB_SEED") {
        Ok(value) => value
            .parse()
            .map_err(|_| CliError::usage(format!("WPB_SEED={value:?} is not a valid seed"))),
        Err(_) => Ok(flag),
    }
}
