//! Construction and analysis of weightwise perfectly balanced (WPB) Boolean
//! functions.
//!
//! The crate has two halves. The first is an exact toolbox for Boolean
//! functions under the weightwise lens: truth tables, weight classes
//! `E_{n,k}`, the full and restricted Walsh-Hadamard transforms, algebraic
//! normal forms, and the counting formulas for the nested search spaces. The
//! second is an evolutionary search stack on top of it: three solution
//! encodings (truth table, weightwise balanced slices, expression trees),
//! their weight-preserving variation operators, the penalty-gated fitness
//! functions, and a steady-state engine with tournament elimination.
//!
//! Everything is deterministic given a seed, and the brute-force oracles in
//! [`oracle`] provide independent ground truth for small instances.

pub mod bits;
pub mod boolfun;
pub mod engine;
pub mod error;
pub mod fitness;
pub mod genotypes;
pub mod oracle;
pub mod variation;

pub use bits::Bits;
pub use boolfun::{
    big_binomial, binomial, hamming_weight, mobius_transform, restricted_bound, scientific,
    space_sizes, wpb_count, wpb_feasible, AnfPolynomial, BooleanFunction, RestrictedSpectrum,
    SignTable, SpaceSizes, WalshSpectrum, WeightClassIndex,
};
pub use engine::{run, run_with_operators, AlgorithmKind, RunConfig, RunResult, TracePoint};
pub use error::{Error, Result};
pub use fitness::{fit1, fit2, FitnessEvaluator, FitnessKind, FitnessValue};
pub use genotypes::{
    evaluate_tree, GpNode, GpOp, GpTree, TruthTableGenotype, VarMasks, WeightwiseGenotype,
};
pub use oracle::{
    brute_force_nonlinearity, brute_force_restricted_nl, enumerate_wpb, CensusEntry, WpbCensus,
};
pub use variation::{OperatorConfig, SwapMode};
