//! The `stats` subcommand and the summary statistics shared with `evolve`.

use std::fmt;
use std::fs;
use std::io::{BufRead, BufReader};
use std::path::PathBuf;

use clap::Args;

use wpb_core::RunResult;

use crate::CliError;

#[derive(Args)]
pub struct StatsArgs {
    /// Directory containing one or more .jsonl result files
    #[arg(long = "in")]
    input: PathBuf,
}

/// Per-(algorithm, p_mut) statistics of the best fitness across runs.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub algorithm: String,
    pub fitness: String,
    pub p_mut: f64,
    pub runs: usize,
    pub average: f64,
    pub std_dev: f64,
    pub median: f64,
    pub min: i64,
    pub max: i64,
}

impl SummaryRow {
    /// Sample statistics (std. dev. with divisor N-1) from raw values.
    pub fn from_values(
        algorithm: String,
        fitness: String,
        p_mut: f64,
        mut values: Vec<i64>,
    ) -> SummaryRow {
        assert!(!values.is_empty());
        values.sort_unstable();
        let runs = values.len();
        let sum: i128 = values.iter().map(|&v| v as i128).sum();
        let sum_sq: i128 = values.iter().map(|&v| (v as i128).pow(2)).sum();
        let average = sum as f64 / runs as f64;
        let std_dev = if runs > 1 {
            let variance =
                (sum_sq as f64 - (sum as f64) * (sum as f64) / runs as f64) / (runs as f64 - 1.0);
            variance.max(0.0).sqrt()
        } else {
            0.0
        };
        let median = if runs % 2 == 1 {
            values[runs / 2] as f64
        } else {
            (values[runs / 2 - 1] + values[runs / 2]) as f64 / 2.0
        };
        SummaryRow {
            algorithm,
            fitness,
            p_mut,
            runs,
            average,
            std_dev,
            median,
            min: values[0],
            max: values[runs - 1],
        }
    }

    /// Groups results by (algorithm, fitness, p_mut), in first-seen order.
    pub fn group(results: &[RunResult]) -> Vec<SummaryRow> {
        let mut keys: Vec<(String, String, f64)> = Vec::new();
        let mut buckets: Vec<Vec<i64>> = Vec::new();
        for result in results {
            let key = (
                result.config.algorithm.name().to_string(),
                fitness_name(result),
                result.config.p_mut,
            );
            match keys.iter().position(|k| *k == key) {
                Some(i) => buckets[i].push(result.best_fitness),
                None => {
                    keys.push(key);
                    buckets.push(vec![result.best_fitness]);
                }
            }
        }
        keys.into_iter()
            .zip(buckets)
            .map(|((algorithm, fitness, p_mut), values)| {
                SummaryRow::from_values(algorithm, fitness, p_mut, values)
            })
            .collect()
    }
}

fn fitness_name(result: &RunResult) -> String {
    match result.config.fitness {
        wpb_core::FitnessKind::Fit1 => "fit1".to_string(),
        wpb_core::FitnessKind::Fit2 => "fit2".to_string(),
    }
}

impl fmt::Display for SummaryRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} pmut={} runs={} avg={:.2} std={:.2} median={} min={} max={}",
            self.algorithm,
            self.fitness,
            self.p_mut,
            self.runs,
            self.average,
            self.std_dev,
            self.median,
            self.min,
            self.max
        )
    }
}

/// Reads every `.jsonl` file in a directory, sorted by file name.
pub fn load_results(dir: &PathBuf) -> Result<Vec<RunResult>, CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|path| path.extension().is_some_and(|ext| ext == "jsonl"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::usage(format!(
            "no .jsonl result files in {}",
            dir.display()
        )));
    }
    let mut results = Vec::new();
    for path in files {
        let reader = BufReader::new(fs::File::open(&path)?);
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let record: RunResult = serde_json::from_str(&line).map_err(|e| {
                CliError::runtime(format!("{}:{}: bad record: {e}", path.display(), lineno + 1))
            })?;
            results.push(record);
        }
    }
    Ok(results)
}

pub fn cmd_stats(args: StatsArgs) -> Result<(), CliError> {
    let results = load_results(&args.input)?;

    println!("algorithm fitness p_mut runs average std_dev median min max");
    for row in SummaryRow::group(&results) {
        println!(
            "{} {} {} {} {:.2} {:.2} {} {} {}",
            row.algorithm,
            row.fitness,
            row.p_mut,
            row.runs,
            row.average,
            row.std_dev,
            row.median,
            row.min,
            row.max
        );
    }

    // long-format distribution table for external plotting
    let csv_path = args.input.join("distribution.csv");
    let mut csv = String::from("algorithm,fitness,p_mut,run_id,best_fitness\n");
    for result in &results {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            result.config.algorithm.name(),
            fitness_name(result),
            result.config.p_mut,
            result.config.run_index,
            result.best_fitness
        ));
    }
    fs::write(&csv_path, csv)?;
    eprintln!("wrote {}", csv_path.display());
    Ok(())
}
