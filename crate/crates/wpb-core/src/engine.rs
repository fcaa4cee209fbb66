//! Steady-state evolutionary loop shared by all four algorithm variants.
//!
//! Each iteration draws three distinct individuals, eliminates the worst
//! (ties broken uniformly), crosses the two survivors, mutates the child
//! under the encoding's own probability semantics, evaluates it and writes
//! it into the vacated slot. Every evaluation, including those of the
//! initial population, counts against the budget.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boolfun::{BooleanFunction, WeightClassIndex};
use crate::error::{Error, Result};
use crate::fitness::{FitnessEvaluator, FitnessKind, FitnessValue};
use crate::genotypes::{GpTree, TruthTableGenotype, VarMasks, WeightwiseGenotype};
use crate::variation::{
    counter_based_crossover, gp_crossover, map_of_ones_crossover, one_point_crossover,
    scattered_flip_mutation, subtree_mutation, swap_mutation, OperatorConfig,
};

/// The four evolutionary algorithm variants: truth-table GA with one-point
/// crossover, weightwise GA with counter-based or map-of-ones crossover,
/// and tree GP.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgorithmKind {
    GaOp,
    GaCb,
    GaMo,
    Gp,
}

impl AlgorithmKind {
    pub const ALL: [AlgorithmKind; 4] = [
        AlgorithmKind::GaOp,
        AlgorithmKind::GaCb,
        AlgorithmKind::GaMo,
        AlgorithmKind::Gp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmKind::GaOp => "ga-op",
            AlgorithmKind::GaCb => "ga-cb",
            AlgorithmKind::GaMo => "ga-mo",
            AlgorithmKind::Gp => "gp",
        }
    }

    /// Population size used in reproduction runs: 200 for the GAs, 1000
    /// for GP.
    pub fn default_population(self) -> usize {
        match self {
            AlgorithmKind::Gp => 1000,
            _ => 200,
        }
    }

    /// Whether the encoding can only represent WPB functions.
    pub fn is_weightwise(self) -> bool {
        matches!(self, AlgorithmKind::GaCb | AlgorithmKind::GaMo)
    }
}

impl std::str::FromStr for AlgorithmKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgorithmKind::ALL
            .into_iter()
            .find(|kind| kind.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown algorithm {s:?}")))
    }
}

/// Complete parameterisation of one run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub algorithm: AlgorithmKind,
    pub n: usize,
    pub fitness: FitnessKind,
    pub population: usize,
    pub p_mut: f64,
    pub budget: u64,
    /// Master seed; together with `run_index` it pins the whole run.
    pub seed: u64,
    /// Stream selector so batches of runs share a master seed.
    pub run_index: u64,
}

impl RunConfig {
    pub fn new(algorithm: AlgorithmKind, n: usize, fitness: FitnessKind) -> Self {
        RunConfig {
            algorithm,
            n,
            fitness,
            population: algorithm.default_population(),
            p_mut: 0.1,
            budget: 500_000,
            seed: 0,
            run_index: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.n.is_power_of_two() || self.n < 2 {
            return Err(Error::InfeasibleVariableCount(self.n));
        }
        if self.population < 3 {
            return Err(Error::InvalidConfig(format!(
                "population {} cannot host a 3-tournament",
                self.population
            )));
        }
        if self.budget <= self.population as u64 {
            return Err(Error::InvalidConfig(format!(
                "budget {} does not exceed the population size {}",
                self.budget, self.population
            )));
        }
        if !(0.0..=1.0).contains(&self.p_mut) {
            return Err(Error::InvalidConfig(format!(
                "mutation probability {} outside [0, 1]",
                self.p_mut
            )));
        }
        Ok(())
    }

    fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.run_index);
        rng
    }
}

/// One point of the best-so-far trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracePoint {
    pub evaluation: u64,
    pub best_fitness: i64,
}

/// Everything recorded about a finished run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub config: RunConfig,
    pub best_genotype: String,
    pub best_table_hex: String,
    pub best_fitness: i64,
    pub pen: u32,
    pub nl_profile: Option<Vec<u32>>,
    pub evaluations: u64,
    pub trace: Vec<TracePoint>,
}

/// Executes one steady-state run to budget exhaustion and reports the best
/// individual ever evaluated.
pub fn run(config: &RunConfig) -> Result<RunResult> {
    run_with_operators(
        config,
        OperatorConfig {
            p_mut: config.p_mut,
            ..OperatorConfig::default()
        },
    )
}

/// As [`run`], with explicit operator settings (swap granularity, GP depth
/// cap, function set). `operators.p_mut` is overridden by the config.
pub fn run_with_operators(config: &RunConfig, operators: OperatorConfig) -> Result<RunResult> {
    config.validate()?;
    let idx = WeightClassIndex::new(config.n);
    let evaluator = FitnessEvaluator::new(config.fitness, &idx)?;
    let operators = OperatorConfig {
        p_mut: config.p_mut,
        ..operators
    };
    match config.algorithm {
        AlgorithmKind::GaOp => evolve(
            config,
            TruthTableRep {
                n: config.n,
                evaluator: &evaluator,
                operators,
            },
        ),
        AlgorithmKind::GaCb | AlgorithmKind::GaMo => evolve(
            config,
            WeightwiseRep {
                n: config.n,
                idx: &idx,
                evaluator: &evaluator,
                operators,
                map_of_ones: config.algorithm == AlgorithmKind::GaMo,
            },
        ),
        AlgorithmKind::Gp => evolve(
            config,
            GpRep {
                n: config.n,
                masks: VarMasks::new(config.n),
                evaluator: &evaluator,
                operators,
            },
        ),
    }
}

/// Encoding-specific hooks the steady-state loop is generic over.
trait Representation {
    type Genotype: Clone;

    fn random(&self, rng: &mut ChaCha8Rng) -> Self::Genotype;
    fn crossover(
        &self,
        a: &Self::Genotype,
        b: &Self::Genotype,
        rng: &mut ChaCha8Rng,
    ) -> Self::Genotype;
    fn mutate(&self, child: &Self::Genotype, rng: &mut ChaCha8Rng) -> Self::Genotype;
    fn evaluate(&self, g: &Self::Genotype) -> FitnessValue;
    fn decode(&self, g: &Self::Genotype) -> BooleanFunction;
    fn serialize(&self, g: &Self::Genotype) -> String;
}

struct TruthTableRep<'a, 'b> {
    n: usize,
    evaluator: &'a FitnessEvaluator<'b>,
    operators: OperatorConfig,
}

impl Representation for TruthTableRep<'_, '_> {
    type Genotype = TruthTableGenotype;

    fn random(&self, rng: &mut ChaCha8Rng) -> TruthTableGenotype {
        TruthTableGenotype::random(self.n, rng)
    }

    fn crossover(
        &self,
        a: &TruthTableGenotype,
        b: &TruthTableGenotype,
        rng: &mut ChaCha8Rng,
    ) -> TruthTableGenotype {
        one_point_crossover(a, b, rng).unwrap()
    }

    fn mutate(&self, child: &TruthTableGenotype, rng: &mut ChaCha8Rng) -> TruthTableGenotype {
        scattered_flip_mutation(child, self.operators.p_mut, rng)
    }

    fn evaluate(&self, g: &TruthTableGenotype) -> FitnessValue {
        self.evaluator.evaluate(&g.decode())
    }

    fn decode(&self, g: &TruthTableGenotype) -> BooleanFunction {
        g.decode()
    }

    fn serialize(&self, g: &TruthTableGenotype) -> String {
        g.decode().to_hex_string()
    }
}

struct WeightwiseRep<'a, 'b> {
    n: usize,
    idx: &'a WeightClassIndex,
    evaluator: &'a FitnessEvaluator<'b>,
    operators: OperatorConfig,
    map_of_ones: bool,
}

impl Representation for WeightwiseRep<'_, '_> {
    type Genotype = WeightwiseGenotype;

    fn random(&self, rng: &mut ChaCha8Rng) -> WeightwiseGenotype {
        WeightwiseGenotype::random(self.n, rng)
    }

    fn crossover(
        &self,
        a: &WeightwiseGenotype,
        b: &WeightwiseGenotype,
        rng: &mut ChaCha8Rng,
    ) -> WeightwiseGenotype {
        if self.map_of_ones {
            map_of_ones_crossover(a, b, rng).unwrap()
        } else {
            counter_based_crossover(a, b, rng).unwrap()
        }
    }

    fn mutate(&self, child: &WeightwiseGenotype, rng: &mut ChaCha8Rng) -> WeightwiseGenotype {
        swap_mutation(child, self.operators.p_mut, self.operators.swap_mode, rng)
    }

    fn evaluate(&self, g: &WeightwiseGenotype) -> FitnessValue {
        // always WPB by construction, so the penalty is never computed
        self.evaluator.evaluate_balanced_slices(g.slices())
    }

    fn decode(&self, g: &WeightwiseGenotype) -> BooleanFunction {
        g.decode(self.idx)
    }

    fn serialize(&self, g: &WeightwiseGenotype) -> String {
        g.to_string_repr()
    }
}

struct GpRep<'a, 'b> {
    n: usize,
    masks: VarMasks,
    evaluator: &'a FitnessEvaluator<'b>,
    operators: OperatorConfig,
}

impl GpRep<'_, '_> {
    fn phenotype(&self, tree: &GpTree) -> BooleanFunction {
        let mut f = tree.evaluate(&self.masks);
        // endpoint normalization before fitness, as for the bitstring GA
        f.set(0, false);
        f.set(f.len() - 1, true);
        f
    }
}

impl Representation for GpRep<'_, '_> {
    type Genotype = GpTree;

    fn random(&self, rng: &mut ChaCha8Rng) -> GpTree {
        GpTree::random(
            self.n,
            self.operators.gp_max_depth,
            self.operators.include_if,
            rng,
        )
    }

    fn crossover(&self, a: &GpTree, b: &GpTree, rng: &mut ChaCha8Rng) -> GpTree {
        gp_crossover(a, b, self.operators.gp_max_depth, rng)
    }

    fn mutate(&self, child: &GpTree, rng: &mut ChaCha8Rng) -> GpTree {
        subtree_mutation(
            child,
            self.operators.p_mut,
            self.n,
            self.operators.gp_max_depth,
            self.operators.include_if,
            rng,
        )
    }

    fn evaluate(&self, g: &GpTree) -> FitnessValue {
        self.evaluator.evaluate(&self.phenotype(g))
    }

    fn decode(&self, g: &GpTree) -> BooleanFunction {
        self.phenotype(g)
    }

    fn serialize(&self, g: &GpTree) -> String {
        g.to_string()
    }
}

fn evolve<R: Representation>(config: &RunConfig, rep: R) -> Result<RunResult> {
    let mut rng = config.rng();
    let mut evaluations: u64 = 0;
    let mut trace: Vec<TracePoint> = Vec::new();
    let mut population: Vec<(R::Genotype, i64)> = Vec::with_capacity(config.population);
    let mut best: Option<(R::Genotype, FitnessValue)> = None;

    let consider_best =
        |g: &R::Genotype, fv: &FitnessValue, evaluations: u64,
         best: &mut Option<(R::Genotype, FitnessValue)>,
         trace: &mut Vec<TracePoint>| {
            if best.as_ref().is_none_or(|(_, b)| fv.value > b.value) {
                *best = Some((g.clone(), fv.clone()));
                trace.push(TracePoint {
                    evaluation: evaluations,
                    best_fitness: fv.value,
                });
            }
        };

    for _ in 0..config.population {
        let g = rep.random(&mut rng);
        let fv = rep.evaluate(&g);
        evaluations += 1;
        consider_best(&g, &fv, evaluations, &mut best, &mut trace);
        population.push((g, fv.value));
    }

    while evaluations < config.budget {
        let trio = draw_distinct_three(config.population, &mut rng);
        let worst_value = trio.iter().map(|&slot| population[slot].1).min().unwrap();
        let tied: Vec<usize> = trio
            .iter()
            .copied()
            .filter(|&slot| population[slot].1 == worst_value)
            .collect();
        let eliminated = if tied.len() > 1 {
            tied[rng.random_range(0..tied.len())]
        } else {
            tied[0]
        };
        let mut parents = trio.into_iter().filter(|&slot| slot != eliminated);
        let first = parents.next().unwrap();
        let second = parents.next().unwrap();

        let child = rep.crossover(&population[first].0, &population[second].0, &mut rng);
        let child = rep.mutate(&child, &mut rng);
        let fv = rep.evaluate(&child);
        evaluations += 1;
        consider_best(&child, &fv, evaluations, &mut best, &mut trace);
        population[eliminated] = (child, fv.value);
    }

    let (genotype, fv) = best.unwrap();
    Ok(RunResult {
        config: config.clone(),
        best_genotype: rep.serialize(&genotype),
        best_table_hex: rep.decode(&genotype).to_hex_string(),
        best_fitness: fv.value,
        pen: fv.pen,
        nl_profile: fv.nl_profile,
        evaluations,
        trace,
    })
}

/// Three distinct population slots, uniformly without replacement.
fn draw_distinct_three(population: usize, rng: &mut ChaCha8Rng) -> [usize; 3] {
    let a = rng.random_range(0..population);
    let b = loop {
        let candidate = rng.random_range(0..population);
        if candidate != a {
            break candidate;
        }
    };
    let c = loop {
        let candidate = rng.random_range(0..population);
        if candidate != a && candidate != b {
            break candidate;
        }
    };
    [a, b, c]
}
