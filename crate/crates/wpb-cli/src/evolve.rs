//! The `evolve` subcommand: expands an experiment matrix into seeded run
//! configurations, executes them (optionally across worker threads), and
//! persists results as JSON Lines plus a trace CSV.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::Args;

use wpb_core::{AlgorithmKind, FitnessKind, RunConfig, RunResult};

use crate::stats::SummaryRow;
use crate::{master_seed, CliError};

#[derive(Args)]
pub struct EvolveArgs {
    /// Algorithm(s): ga-op, ga-cb, ga-mo, gp (comma-separated for a grid)
    #[arg(long, value_delimiter = ',', required = true)]
    algorithm: Vec<String>,
    /// Number of variables (must be a power of two)
    #[arg(long)]
    n: usize,
    /// Objective: fit1 (sum of nl_k) or fit2 (minimum nl_k)
    #[arg(long, default_value = "fit1")]
    fitness: String,
    /// Mutation probability grid (comma-separated)
    #[arg(long = "pmut", value_delimiter = ',', default_value = "0.1")]
    pmut: Vec<f64>,
    /// Population size; defaults to 200 for the GAs and 1000 for GP
    #[arg(long)]
    pop: Option<usize>,
    /// Fitness evaluation budget per run, initialization included
    #[arg(long, default_value_t = 500_000)]
    budget: u64,
    /// Runs per (algorithm, pmut) cell
    #[arg(long, default_value_t = 30)]
    runs: u64,
    /// Master seed (the WPB_SEED environment variable overrides it)
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Output directory for results.jsonl and traces.csv
    #[arg(long)]
    out: PathBuf,
    /// Worker threads across runs; runs themselves stay sequential
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

/// The fully expanded set of run configurations for one invocation:
/// {algorithm} x {p_mut grid} x {runs per cell}, with pairwise-distinct
/// (seed, run_index) streams.
pub struct ExperimentMatrix {
    pub configs: Vec<RunConfig>,
    pub master_seed: u64,
    pub out_dir: PathBuf,
}

impl ExperimentMatrix {
    #[allow(clippy::too_many_arguments)]
    pub fn expand(
        algorithms: &[AlgorithmKind],
        n: usize,
        fitness: FitnessKind,
        pmut_grid: &[f64],
        population: Option<usize>,
        budget: u64,
        runs: u64,
        master_seed: u64,
        out_dir: PathBuf,
    ) -> Result<Self, CliError> {
        let mut configs = Vec::new();
        let mut run_index = 0u64;
        for &algorithm in algorithms {
            for &p_mut in pmut_grid {
                for _ in 0..runs {
                    let config = RunConfig {
                        algorithm,
                        n,
                        fitness,
                        population: population.unwrap_or_else(|| algorithm.default_population()),
                        p_mut,
                        budget,
                        seed: master_seed,
                        run_index,
                    };
                    config.validate()?;
                    configs.push(config);
                    run_index += 1;
                }
            }
        }
        if configs.is_empty() {
            return Err(CliError::usage("the experiment matrix is empty"));
        }
        Ok(ExperimentMatrix {
            configs,
            master_seed,
            out_dir,
        })
    }

    /// Executes every run, spreading them over `jobs` worker threads. Run
    /// order in the output is the expansion order regardless of `jobs`.
    pub fn execute(&self, jobs: usize) -> Result<Vec<RunResult>, CliError> {
        let jobs = jobs.clamp(1, self.configs.len());
        let next = AtomicUsize::new(0);
        let slots: Mutex<Vec<Option<Result<RunResult, wpb_core::Error>>>> =
            Mutex::new((0..self.configs.len()).map(|_| None).collect());

        std::thread::scope(|scope| {
            for _ in 0..jobs {
                scope.spawn(|| loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= self.configs.len() {
                        break;
                    }
                    let outcome = wpb_core::run(&self.configs[i]);
                    slots.lock().unwrap()[i] = Some(outcome);
                });
            }
        });

        let mut results = Vec::with_capacity(self.configs.len());
        for slot in slots.into_inner().unwrap() {
            match slot.expect("every run slot is filled") {
                Ok(result) => results.push(result),
                Err(e) => return Err(CliError::usage(e.to_string())),
            }
        }
        Ok(results)
    }
}

pub fn cmd_evolve(args: EvolveArgs) -> Result<(), CliError> {
    let algorithms = args
        .algorithm
        .iter()
        .map(|s| s.parse::<AlgorithmKind>().map_err(CliError::from))
        .collect::<Result<Vec<_>, _>>()?;
    let fitness = match args.fitness.as_str() {
        "fit1" => FitnessKind::Fit1,
        "fit2" => FitnessKind::Fit2,
        other => return Err(CliError::usage(format!("unknown fitness {other:?}"))),
    };
    let seed = master_seed(args.seed)?;
    let matrix = ExperimentMatrix::expand(
        &algorithms,
        args.n,
        fitness,
        &args.pmut,
        args.pop,
        args.budget,
        args.runs,
        seed,
        args.out.clone(),
    )?;

    eprintln!(
        "running {} configurations (master seed {}) into {}",
        matrix.configs.len(),
        matrix.master_seed,
        matrix.out_dir.display()
    );
    let results = matrix.execute(args.jobs)?;
    write_artifacts(&matrix.out_dir, &results)?;

    for row in SummaryRow::group(&results) {
        println!("{row}");
    }
    Ok(())
}

/// Writes results.jsonl and traces.csv; on any failure both files are
/// removed so a broken invocation leaves nothing behind.
fn write_artifacts(dir: &Path, results: &[RunResult]) -> Result<(), CliError> {
    fs::create_dir_all(dir)?;
    let results_path = dir.join("results.jsonl");
    let traces_path = dir.join("traces.csv");

    let outcome = (|| -> Result<(), CliError> {
        let mut jsonl = fs::File::create(&results_path)?;
        for result in results {
            let line = serde_json::to_string(result)
                .map_err(|e| CliError::runtime(format!("serializing result: {e}")))?;
            writeln!(jsonl, "{line}")?;
        }

        let mut csv = fs::File::create(&traces_path)?;
        writeln!(csv, "run_id,evaluation,best_fitness")?;
        for result in results {
            for point in &result.trace {
                writeln!(
                    csv,
                    "{},{},{}",
                    result.config.run_index, point.evaluation, point.best_fitness
                )?;
            }
        }
        Ok(())
    })();

    if outcome.is_err() {
        let _ = fs::remove_file(&results_path);
        let _ = fs::remove_file(&traces_path);
    }
    outcome
}
