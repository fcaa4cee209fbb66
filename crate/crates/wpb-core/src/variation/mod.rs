//! Crossover and mutation operators for the three encodings.

mod tree;
mod truth_table;
mod weightwise;

pub use tree::{gp_crossover, subtree_mutation, GpCrossoverKind};
pub use truth_table::{flip_mutation, one_point_crossover, scattered_flip_mutation};
pub use weightwise::{counter_based_crossover, map_of_ones_crossover, swap_mutation, SwapMode};

/// Shared operator parameters.
#[derive(Clone, Copy, Debug)]
pub struct OperatorConfig {
    /// Mutation probability; the encoding decides what one trigger means.
    pub p_mut: f64,
    /// Depth cap enforced on every GP offspring.
    pub gp_max_depth: usize,
    /// Whether the ternary IF operator is part of the GP function set.
    pub include_if: bool,
    /// Swap-mutation trigger granularity for the weightwise encoding.
    pub swap_mode: SwapMode,
}

impl Default for OperatorConfig {
    fn default() -> Self {
        OperatorConfig {
            p_mut: 0.1,
            gp_max_depth: 5,
            include_if: true,
            swap_mode: SwapMode::SliceChain,
        }
    }
}
