use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("capacity exceeded: {requested} vertices requested, limit is {limit}")]
    Capacity { requested: usize, limit: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("operation undefined on the void complex")]
    VoidComplex,
    #[error("face budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },
    #[error("parameters outside the formula's domain: {0}")]
    Domain(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("torsion in input Betti vector: {0}")]
    Torsion(String),
    #[error("integer overflow evaluating {0}")]
    Overflow(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
