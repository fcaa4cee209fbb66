use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("weight class k={k} is outside [1, {}] for n={n}", n.saturating_sub(1))]
    WeightClassOutOfRange { n: usize, k: usize },

    #[error("truth table has {got} bits, expected 2^{n} = {}", 1usize << n)]
    TableLength { n: usize, got: usize },

    #[error("n={0} is not a power of two: weightwise perfect balance is infeasible")]
    InfeasibleVariableCount(usize),

    #[error("variable counts differ: {0} vs {1}")]
    VariableCountMismatch(usize, usize),

    #[error("slice for k={k} has length {got}, expected {expected}")]
    SliceLength {
        k: usize,
        expected: usize,
        got: usize,
    },

    #[error("slice for k={k} has weight {got}, expected {expected}")]
    SliceWeight {
        k: usize,
        expected: usize,
        got: usize,
    },

    #[error("exhaustive enumeration is limited to n in {{2, 4}}, got n={0}")]
    CensusInfeasible(usize),

    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}
