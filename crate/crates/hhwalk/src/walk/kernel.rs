//! The second-order transition kernel and the stepping machinery.

use rand::Rng;

use crate::error::WalkError;
use crate::graph::{NodeId, SimpleGraph};
use crate::walk::params::{Node2vecParams, WalkState};

/// Unnormalized weight of moving from state `(prev, cur)` to neighbor `w`
/// of `cur`: `alpha` on the backtrack, `beta` when `w` closes a triangle
/// with the previous node, `gamma` otherwise.
#[inline]
fn weight_of(g: &SimpleGraph, p: &Node2vecParams, prev: NodeId, w: NodeId) -> f64 {
    if w == prev {
        p.alpha
    } else if g.has_edge(prev, w) {
        p.beta
    } else {
        p.gamma
    }
}

/// Fills `buf` with the unnormalized weights over `neighbors(cur)` and
/// returns their sum. The caller normalizes.
#[inline]
pub(crate) fn fill_weights(
    g: &SimpleGraph,
    p: &Node2vecParams,
    s: WalkState,
    buf: &mut Vec<f64>,
) -> f64 {
    buf.clear();
    let mut total = 0.0;
    for &w in g.neighbors(s.cur) {
        let weight = weight_of(g, p, s.prev, w);
        buf.push(weight);
        total += weight;
    }
    total
}

/// The transition weights out of a walk state: the neighbor list of the
/// current node and one unnormalized weight per neighbor.
///
/// Errors with [`WalkError::DeadEnd`] when all weights vanish, which can
/// only happen when one of the parameters is zero.
pub fn transition_weights<'g>(
    g: &'g SimpleGraph,
    p: &Node2vecParams,
    s: WalkState,
) -> Result<(&'g [NodeId], Vec<f64>), WalkError> {
    debug_assert!(g.has_edge(s.prev, s.cur), "state must be a directed edge");
    let mut weights = Vec::new();
    let total = fill_weights(g, p, s, &mut weights);
    if total <= 0.0 {
        return Err(WalkError::DeadEnd {
            prev: s.prev,
            cur: s.cur,
        });
    }
    Ok((g.neighbors(s.cur), weights))
}

/// Samples the next state from `(prev, cur)`.
pub fn step<R: Rng + ?Sized>(
    g: &SimpleGraph,
    p: &Node2vecParams,
    s: WalkState,
    rng: &mut R,
) -> Result<WalkState, WalkError> {
    let mut walker = Walker::with_state(g, *p, s, rng);
    walker.step().map(|(state, _)| state)
}

/// A uniformly chosen directed edge, the default start state.
pub fn uniform_start<R: Rng + ?Sized>(g: &SimpleGraph, rng: &mut R) -> WalkState {
    let id = rng.random_range(0..g.directed_edge_count());
    let (prev, cur) = g.directed_edge_at(id);
    WalkState { prev, cur }
}

/// Reusable stepping state: one weight buffer, no per-step allocation.
pub struct Walker<'g, 'r, R: Rng + ?Sized> {
    graph: &'g SimpleGraph,
    params: Node2vecParams,
    state: WalkState,
    rng: &'r mut R,
    weights: Vec<f64>,
}

impl<'g, 'r, R: Rng + ?Sized> Walker<'g, 'r, R> {
    pub fn with_state(
        graph: &'g SimpleGraph,
        params: Node2vecParams,
        state: WalkState,
        rng: &'r mut R,
    ) -> Self {
        Self {
            graph,
            params,
            state,
            rng,
            weights: Vec::with_capacity(16),
        }
    }

    /// Starts from a uniformly chosen directed edge.
    pub fn uniform(graph: &'g SimpleGraph, params: Node2vecParams, rng: &'r mut R) -> Self {
        let state = uniform_start(graph, rng);
        Self::with_state(graph, params, state, rng)
    }

    pub fn state(&self) -> WalkState {
        self.state
    }

    /// Advances one step and returns the new state together with the rank
    /// of the chosen neighbor in the old current node's adjacency list
    /// (which makes the directed-edge id of the new state an O(1) lookup).
    #[inline]
    pub fn step(&mut self) -> Result<(WalkState, usize), WalkError> {
        let total = fill_weights(self.graph, &self.params, self.state, &mut self.weights);
        if total <= 0.0 {
            return Err(WalkError::DeadEnd {
                prev: self.state.prev,
                cur: self.state.cur,
            });
        }
        let mut target = self.rng.random_range(0.0..total);
        let mut rank = self.weights.len() - 1;
        for (i, &w) in self.weights.iter().enumerate() {
            if target < w {
                rank = i;
                break;
            }
            target -= w;
        }
        let next = self.graph.neighbors(self.state.cur)[rank];
        self.state = WalkState {
            prev: self.state.cur,
            cur: next,
        };
        Ok((self.state, rank))
    }
}
