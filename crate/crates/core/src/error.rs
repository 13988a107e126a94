use alloc::string::String;

/// Errors raised by the optimizers and their configuration checks.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EvoError {
    #[error("invalid search domain: {0}")]
    InvalidDomain(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid problem: {0}")]
    InvalidProblem(String),
    /// No feasible point was found while sampling the initial population.
    #[error("could not sample a feasible initial individual within {attempts} draws")]
    InitializationExhausted { attempts: usize },
    /// A child could not be placed in the feasible region.
    #[error("reproduction gave up after {retries} rejected draws")]
    ReproductionExhausted { retries: usize },
    #[error("population has {found} individuals, expected {expected}")]
    PopulationSize { expected: usize, found: usize },
    #[error("objective vectors differ in length ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
}
