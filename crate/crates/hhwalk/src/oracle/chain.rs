//! The walk's Markov chain on directed edges, materialized.

use crate::dist::{EdgeStationaryDistribution, StationaryDistribution};
use crate::error::OracleError;
use crate::graph::{NodeId, SimpleGraph};
use crate::walk::Node2vecParams;

/// Explicit sparse transition matrix over directed-edge states. State ids
/// are the graph's directed-edge ids; row `(u, v)` holds one entry per
/// outgoing edge `(v, w)`.
#[derive(Debug, Clone)]
pub struct EdgeChain {
    node_count: usize,
    edges: Vec<(NodeId, NodeId)>,
    rows: Vec<Vec<(u32, f64)>>,
}

impl EdgeChain {
    pub fn num_states(&self) -> usize {
        self.edges.len()
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// The directed edge of a state id.
    pub fn edge(&self, state: usize) -> (NodeId, NodeId) {
        self.edges[state]
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn row(&self, state: usize) -> &[(u32, f64)] {
        &self.rows[state]
    }

    /// One transition applied from the left: `out = pi P`.
    pub fn apply(&self, pi: &[f64], out: &mut [f64]) {
        out.fill(0.0);
        for (state, row) in self.rows.iter().enumerate() {
            let mass = pi[state];
            if mass == 0.0 {
                continue;
            }
            for &(target, p) in row {
                out[target as usize] += mass * p;
            }
        }
    }

    /// L1 norm of `pi P - pi`, the balance residual of a candidate
    /// stationary vector.
    pub fn balance_residual(&self, pi: &EdgeStationaryDistribution) -> f64 {
        assert_eq!(pi.len(), self.num_states());
        let mut next = vec![0.0; self.num_states()];
        self.apply(pi.values(), &mut next);
        next.iter()
            .zip(pi.values())
            .map(|(a, b)| (a - b).abs())
            .sum()
    }
}

/// Builds the chain: for each directed edge `(u, v)`, the row over edges
/// `(v, w)` with probabilities proportional to the second-order weights.
/// A row with zero total weight is a dead end and an error; it cannot
/// happen for strictly positive parameters.
pub fn build_edge_chain(g: &SimpleGraph, p: &Node2vecParams) -> Result<EdgeChain, OracleError> {
    let edges: Vec<(NodeId, NodeId)> = g.directed_edges().collect();
    let mut rows = Vec::with_capacity(edges.len());
    for &(prev, cur) in &edges {
        let neighbors = g.neighbors(cur);
        let mut row = Vec::with_capacity(neighbors.len());
        let mut total = 0.0;
        for &w in neighbors {
            let weight = if w == prev {
                p.alpha
            } else if g.has_edge(prev, w) {
                p.beta
            } else {
                p.gamma
            };
            if weight > 0.0 {
                let target = g.directed_edge_id(cur, w).expect("neighbor edge") as u32;
                row.push((target, weight));
                total += weight;
            }
        }
        if total <= 0.0 {
            return Err(OracleError::DeadEndState { prev, cur });
        }
        for entry in &mut row {
            entry.1 /= total;
        }
        rows.push(row);
    }
    Ok(EdgeChain {
        node_count: g.node_count(),
        edges,
        rows,
    })
}

/// Sums edge probabilities into their target nodes:
/// `pi(v) = sum of pi(e) over edges e pointing at v`.
pub fn project_edges_to_nodes(
    dist: &EdgeStationaryDistribution,
    chain: &EdgeChain,
) -> StationaryDistribution {
    assert_eq!(dist.len(), chain.num_states());
    let mut values = vec![0.0; chain.node_count()];
    for (state, &(_, target)) in chain.edges().iter().enumerate() {
        values[target as usize] += dist.get(state);
    }
    StationaryDistribution::from_values(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{expand_household, CommunityTemplate, UniverseGraph};

    fn k3() -> SimpleGraph {
        SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn rows_are_stochastic() {
        let universe =
            UniverseGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
                .unwrap();
        let hh = expand_household(&universe, CommunityTemplate::clique).unwrap();
        let p = Node2vecParams::new(1.0, 2.0, 3.0).unwrap();
        let chain = build_edge_chain(hh.graph(), &p).unwrap();
        assert_eq!(chain.num_states(), 36);
        for state in 0..chain.num_states() {
            let sum: f64 = chain.row(state).iter().map(|&(_, p)| p).sum();
            assert!((sum - 1.0).abs() < 1e-14);
            // Transitions continue from the target node.
            let (_, cur) = chain.edge(state);
            for &(target, _) in chain.row(state) {
                assert_eq!(chain.edge(target as usize).0, cur);
            }
        }
    }

    #[test]
    fn spot_row_weights_inside_a_clique() {
        // State (a, b) inside a 3-clique with alpha=1, beta=2, gamma=3:
        // backtrack 1/6, third member 2/6, arm 3/6.
        let universe =
            UniverseGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
                .unwrap();
        let hh = expand_household(&universe, CommunityTemplate::clique).unwrap();
        let p = Node2vecParams::new(1.0, 2.0, 3.0).unwrap();
        let chain = build_edge_chain(hh.graph(), &p).unwrap();

        let info = hh.community(0);
        let (a, b) = (info.members.start, info.members.start + 1);
        let c = info.members.start + 2;
        let arm = hh.arm_of(b);
        let state = hh.graph().directed_edge_id(a, b).unwrap();
        for &(target, prob) in chain.row(state) {
            let (_, w) = chain.edge(target as usize);
            let expected = if w == a {
                1.0 / 6.0
            } else if w == c {
                2.0 / 6.0
            } else {
                assert_eq!(w, arm);
                3.0 / 6.0
            };
            assert!((prob - expected).abs() < 1e-15);
        }
    }

    #[test]
    fn dead_end_is_detected() {
        // alpha = 0 with a pendant node: the backtrack is the only move.
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let p = Node2vecParams::new(0.0, 1.0, 1.0).unwrap();
        assert!(matches!(
            build_edge_chain(&g, &p),
            Err(OracleError::DeadEndState { .. })
        ));
    }

    #[test]
    fn uniform_edge_distribution_projects_to_degrees() {
        let g = k3();
        let p = Node2vecParams::simple_random_walk();
        let chain = build_edge_chain(&g, &p).unwrap();
        let uniform = EdgeStationaryDistribution::from_values(vec![1.0 / 6.0; chain.num_states()]);
        let nodes = project_edges_to_nodes(&uniform, &chain);
        for v in 0..3 {
            assert!((nodes.get(v) - 2.0 / 6.0).abs() < 1e-15);
        }
        assert!((nodes.sum() - 1.0).abs() < 1e-15);
    }
}
