//! Walk parameters and the directed-edge walk state.

use crate::error::WalkError;
use crate::graph::NodeId;

/// The three node2vec weights: `alpha` for backtracking to the previous
/// node, `beta` for moving to a common neighbor of the current and previous
/// node (closing a triangle), `gamma` for any other neighbor.
///
/// All weights must be finite and non-negative. Stationary-distribution
/// statements additionally need all three strictly positive; use
/// [`strictly_positive`](Self::strictly_positive) where that matters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node2vecParams {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl Node2vecParams {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Result<Self, WalkError> {
        for (name, value) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
            if !value.is_finite() || value < 0.0 {
                return Err(WalkError::InvalidParams(format!(
                    "{name} must be finite and non-negative, got {value}"
                )));
            }
        }
        if alpha == 0.0 && beta == 0.0 && gamma == 0.0 {
            return Err(WalkError::InvalidParams(
                "at least one weight must be positive".into(),
            ));
        }
        Ok(Self { alpha, beta, gamma })
    }

    /// Equal weights: the simple random walk.
    pub fn simple_random_walk() -> Self {
        Self {
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
        }
    }

    pub fn strictly_positive(&self) -> bool {
        self.alpha > 0.0 && self.beta > 0.0 && self.gamma > 0.0
    }
}

/// The true Markov state of the walk: the directed edge it just traversed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WalkState {
    pub prev: NodeId,
    pub cur: NodeId,
}

impl WalkState {
    pub fn new(prev: NodeId, cur: NodeId) -> Self {
        Self { prev, cur }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_negative_and_non_finite() {
        assert!(Node2vecParams::new(-1.0, 1.0, 1.0).is_err());
        assert!(Node2vecParams::new(1.0, f64::NAN, 1.0).is_err());
        assert!(Node2vecParams::new(0.0, 0.0, 0.0).is_err());
        assert!(Node2vecParams::new(0.0, 1.0, 1.0).is_ok());
    }

    #[test]
    fn srw_is_all_ones() {
        let p = Node2vecParams::simple_random_walk();
        assert_eq!((p.alpha, p.beta, p.gamma), (1.0, 1.0, 1.0));
        assert!(p.strictly_positive());
    }
}
