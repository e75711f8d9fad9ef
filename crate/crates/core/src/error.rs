use thiserror::Error;

/// Errors raised by the graph, bound and solver routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("binomial C({n},{k}) overflows u64")]
    Overflow { n: u64, k: u64 },

    #[error("ground set size {n} is outside the supported range ({reason})")]
    GroundSet { n: usize, reason: &'static str },

    #[error("malformed triple {0:?} for n = {1}")]
    BadTriple(Vec<i64>, usize),

    #[error("vertex index {index} out of range (graph has {count} vertices)")]
    IndexOutOfRange { index: u64, count: u64 },

    #[error("subset size {l} exceeds the vertex count {count}")]
    SubsetTooLarge { l: u64, count: u64 },

    #[error("invalid family parameters: {0}")]
    BadFamily(String),

    #[error("enumeration of {estimate} subsets exceeds the budget of {budget}")]
    OverBudget { estimate: u128, budget: u128 },

    #[error("subset file: {0}")]
    Format(String),

    #[error("no valid decomposition: {0}")]
    Decomposition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
