use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A query was not exactly the oracle's query size. The query counter is
    /// left untouched when this is returned.
    #[error("query must have exactly {expected} elements, got {got}")]
    QuerySize { expected: usize, got: usize },

    #[error("oracle does not answer {0} queries")]
    ModeDisallowed(&'static str),

    /// The instance is too small for the requested procedure.
    #[error("infeasible instance: {0}")]
    Infeasible(String),

    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// An algorithm under duel blew through the safety cap.
    #[error("runaway algorithm: {used} queries exceed the cap of {cap}")]
    Runaway { used: usize, cap: usize },

    /// Two committed color relations contradict each other.
    #[error("inconsistent color relations: {0}")]
    Inconsistent(String),

    /// An oracle produced answers no single coloring can realize.
    #[error("oracle answers are self-contradictory: {0}")]
    OracleContradiction(String),
}
