//! A triangle with arbitrarily many pendant arms per corner.
//!
//! This gadget drops the household assumption that every community member
//! has exactly one outside edge: the three triangle nodes `u`, `v`, `w`
//! carry `n`, `p` and `m` degree-one arms. Its edge-level stationary
//! distribution has a product closed form, and remarkably the six directed
//! triangle edges all share one value however asymmetric the arm counts.

use std::io::Write;

use crate::dist::EdgeStationaryDistribution;
use crate::error::OracleError;
use crate::graph::{NodeId, SimpleGraph};
use crate::walk::Node2vecParams;

/// Arm counts of the gadget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AsymTriangleGadget {
    pub n: u32,
    pub p: u32,
    pub m: u32,
}

impl AsymTriangleGadget {
    pub fn new(n: u32, p: u32, m: u32) -> Self {
        Self { n, p, m }
    }

    pub fn node_count(&self) -> usize {
        3 + (self.n + self.p + self.m) as usize
    }

    pub fn directed_edge_count(&self) -> usize {
        6 + 2 * (self.n + self.p + self.m) as usize
    }
}

/// Builds the gadget graph: nodes 0, 1, 2 are the triangle `u`, `v`, `w`;
/// arms follow in blocks (`n` arms of `u`, then `p` of `v`, then `m` of `w`).
pub fn build_asym_triangle_graph(n: u32, p: u32, m: u32) -> SimpleGraph {
    let mut edges: Vec<(NodeId, NodeId)> = vec![(0, 1), (0, 2), (1, 2)];
    let mut next = 3;
    for (corner, arms) in [(0u32, n), (1, p), (2, m)] {
        for _ in 0..arms {
            edges.push((corner, next));
            next += 1;
        }
    }
    SimpleGraph::from_edges(next as usize, &edges).expect("gadget edges are simple")
}

/// The closed-form stationary distribution over the gadget's directed
/// edges, indexed by the directed-edge ids of
/// [`build_asym_triangle_graph`]. Unnormalized values are products of the
/// two factors
///
/// ```text
/// triangle corner x with a arms:  alpha + beta + a gamma     (entered from the triangle)
///                                 alpha + (a + 1) gamma      (entered from an arm)
/// ```
///
/// taken over the corners a directed edge does not point at; normalization
/// divides by the total over all `6 + 2(n + p + m)` edges.
pub fn asym_triangle_closed_form(
    gadget: AsymTriangleGadget,
    params: &Node2vecParams,
) -> Result<EdgeStationaryDistribution, OracleError> {
    let (a, b, g) = (params.alpha, params.beta, params.gamma);
    let (n, p, m) = (gadget.n as f64, gadget.p as f64, gadget.m as f64);

    // Per-corner factors.
    let tri_u = a + b + n * g;
    let tri_v = a + b + p * g;
    let tri_w = a + b + m * g;
    let arm_u = a + (n + 1.0) * g;
    let arm_v = a + (p + 1.0) * g;
    let arm_w = a + (m + 1.0) * g;

    let triangle_value = tri_u * tri_v * tri_w;
    let arm_value_u = arm_u * tri_v * tri_w;
    let arm_value_v = tri_u * arm_v * tri_w;
    let arm_value_w = tri_u * tri_v * arm_w;

    let graph = build_asym_triangle_graph(gadget.n, gadget.p, gadget.m);
    let values: Vec<f64> = graph
        .directed_edges()
        .map(|(src, dst)| {
            if src < 3 && dst < 3 {
                triangle_value
            } else {
                // Exactly one endpoint is an arm node; the corner decides
                // the block, and both orientations share the value.
                let corner = if src < 3 { src } else { dst };
                match corner {
                    0 => arm_value_u,
                    1 => arm_value_v,
                    _ => arm_value_w,
                }
            }
        })
        .collect();

    let total: f64 = values.iter().sum();
    if total <= 0.0 || total.is_nan() {
        return Err(OracleError::DegenerateParams(
            "normalization constant is zero".into(),
        ));
    }
    Ok(EdgeStationaryDistribution::from_unnormalized(values))
}

/// `src,dst,pi_edge` rows in directed-edge id order.
pub fn write_edge_distribution_csv<W: Write>(
    g: &SimpleGraph,
    dist: &EdgeStationaryDistribution,
    mut w: W,
) -> std::io::Result<()> {
    writeln!(w, "src,dst,pi_edge")?;
    for (state, (src, dst)) in g.directed_edges().enumerate() {
        writeln!(w, "{src},{dst},{:.17e}", dist.get(state))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::chain::build_edge_chain;
    use crate::oracle::solve::{solve_stationary, SolveMethod};

    #[test]
    fn gadget_counts() {
        let g = build_asym_triangle_graph(1, 1, 1);
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(build_asym_triangle_graph(0, 0, 0).edge_count(), 3);
        let g2 = build_asym_triangle_graph(2, 0, 0);
        assert_eq!(g2.node_count(), 5);
        assert_eq!(g2.edge_count(), 5);
        let mut degrees = g2.degrees();
        degrees.sort_unstable();
        assert_eq!(degrees, vec![1, 1, 2, 2, 4]);
    }

    #[test]
    fn symmetric_case_has_two_value_classes() {
        let params = Node2vecParams::new(1.0, 2.0, 0.5).unwrap();
        let gadget = AsymTriangleGadget::new(1, 1, 1);
        let graph = build_asym_triangle_graph(1, 1, 1);
        let dist = asym_triangle_closed_form(gadget, &params).unwrap();
        let mut triangle_values = Vec::new();
        let mut arm_values = Vec::new();
        for (state, (src, dst)) in graph.directed_edges().enumerate() {
            if src < 3 && dst < 3 {
                triangle_values.push(dist.get(state));
            } else {
                arm_values.push(dist.get(state));
            }
        }
        assert_eq!(triangle_values.len(), 6);
        assert_eq!(arm_values.len(), 6);
        for v in &triangle_values {
            assert!((v - triangle_values[0]).abs() < 1e-15);
        }
        for v in &arm_values {
            assert!((v - arm_values[0]).abs() < 1e-15);
        }
    }

    #[test]
    fn triangle_edges_share_one_value_even_when_asymmetric() {
        let params = Node2vecParams::new(1.0, 1.0, 1.0).unwrap();
        let gadget = AsymTriangleGadget::new(2, 1, 0);
        let graph = build_asym_triangle_graph(2, 1, 0);
        let dist = asym_triangle_closed_form(gadget, &params).unwrap();
        let triangle: Vec<f64> = graph
            .directed_edges()
            .enumerate()
            .filter(|&(_, (s, d))| s < 3 && d < 3)
            .map(|(state, _)| dist.get(state))
            .collect();
        assert_eq!(triangle.len(), 6);
        for v in &triangle {
            assert!((v - triangle[0]).abs() < 1e-15);
        }
    }

    #[test]
    fn closed_form_matches_direct_solve() {
        let params = Node2vecParams::new(0.7, 1.9, 1.3).unwrap();
        for (n, p, m) in [(1, 1, 1), (2, 1, 0), (3, 0, 2), (0, 0, 1)] {
            let gadget = AsymTriangleGadget::new(n, p, m);
            let graph = build_asym_triangle_graph(n, p, m);
            let closed = asym_triangle_closed_form(gadget, &params).unwrap();
            let chain = build_edge_chain(&graph, &params).unwrap();
            let solved = solve_stationary(&chain, SolveMethod::DirectSolve, 0.0).unwrap();
            assert!(
                closed.max_abs_diff(&solved) < 1e-12,
                "({n},{p},{m}): {:?}",
                closed.max_abs_diff(&solved)
            );
            assert!(chain.balance_residual(&closed) < 1e-13);
        }
    }
}
