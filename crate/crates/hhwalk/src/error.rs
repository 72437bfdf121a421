//! Error types shared across the crate.

use thiserror::Error;

/// Errors raised while building or parsing graphs.
#[derive(Debug, Error)]
pub enum GraphError {
    #[error("invalid degree sequence: {0}")]
    InvalidDegreeSequence(String),

    /// A rejection-sampling loop hit its retry cap. For the configuration
    /// model this signals a degree sequence that is unlikely to yield a
    /// simple connected graph; for degree sampling, a pathological lambda.
    #[error("resampling retries exhausted after {attempts} attempts")]
    RetriesExhausted { attempts: u64 },

    #[error("template has {got} nodes but the universe node has degree {expected}")]
    TemplateSizeMismatch { expected: u32, got: u32 },

    #[error("template is not an automorphic community: {0}")]
    NotAutomorphic(String),

    #[error("custom templates with more than {max} nodes are not supported (got {got})")]
    TemplateTooLarge { max: u32, got: u32 },

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("node id {node} out of range for {node_count} nodes")]
    NodeOutOfRange { node: u32, node_count: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Errors raised while stepping a walk.
#[derive(Debug, Error)]
pub enum WalkError {
    /// Every outgoing weight of the current state is zero. Possible only
    /// when one of the walk parameters is zero.
    #[error("dead end at state ({prev} -> {cur}): all transition weights are zero")]
    DeadEnd { prev: u32, cur: u32 },

    #[error("invalid walk parameters: {0}")]
    InvalidParams(String),
}

/// Errors raised by the closed-form and exact-numeric sojourn machinery.
#[derive(Debug, Error)]
pub enum AnalyticsError {
    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),

    #[error("linear system is singular")]
    SingularSystem,

    #[error("household graph is not usable here: {0}")]
    InvalidHousehold(String),
}

/// Errors raised by the directed-edge chain oracle.
#[derive(Debug, Error)]
pub enum OracleError {
    /// Some directed edge has no outgoing probability mass before
    /// normalization. Cannot happen for strictly positive parameters.
    #[error("dead-end state ({prev} -> {cur}) in the edge chain")]
    DeadEndState { prev: u32, cur: u32 },

    #[error(
        "power iteration did not converge after {iterations} iterations (residual {residual:.3e})"
    )]
    NotConverged { iterations: u64, residual: f64 },

    #[error("linear system is singular")]
    SingularSystem,

    #[error("degenerate parameters: {0}")]
    DegenerateParams(String),

    /// The direct solver builds a dense system; refuse sizes where power
    /// iteration is the intended method.
    #[error("chain with {states} states is too large for the dense direct solve (max {max})")]
    TooLargeForDirectSolve { states: usize, max: usize },
}
