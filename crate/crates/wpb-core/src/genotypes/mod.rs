//! Candidate-solution encodings and their decoding to truth tables.

mod tree;
mod truth_table;
mod weightwise;

pub use tree::{evaluate_tree, full_node, grow_node, GpNode, GpOp, GpTree, VarMasks};
pub use truth_table::TruthTableGenotype;
pub use weightwise::WeightwiseGenotype;
