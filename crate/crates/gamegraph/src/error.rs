use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    /// The search ran out of nodes; `lower..=upper` brackets the true value.
    #[error("search budget exhausted in {what}: value lies in [{lower}, {upper}]")]
    Budget {
        what: &'static str,
        lower: usize,
        upper: usize,
    },
    #[error("invalid input: {0}")]
    Invalid(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    /// The input broke a precondition of the strategy (e.g. a width bound).
    #[error("protocol violation: {0}")]
    Protocol(String),
    /// An internal invariant failed; this is a bug in the strategy.
    #[error("assertion failed: {0}")]
    Assertion(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("round {round}: illegal presenter move: {reason}")]
    IllegalMove { round: usize, reason: String },
    #[error("round {round}: color {color} breaks the coloring obligation")]
    ImproperColor { round: usize, color: usize },
    #[error("round {round}: strategy failed: {source}")]
    Strategy { round: usize, source: StrategyError },
    #[error("budget of {budget} exceeded after {partial} scenarios")]
    Budget { budget: usize, partial: usize },
    #[error("minimax budget exceeded; value is at least {lower}")]
    ValueBudget { lower: usize },
    #[error("invalid game graph: {0}")]
    InvalidGameGraph(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid model: {0}")]
    Invalid(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A checked property of a construction failed.
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Strategy(#[from] StrategyError),
}
