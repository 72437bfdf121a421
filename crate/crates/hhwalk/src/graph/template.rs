//! Community templates: the small vertex-transitive graphs that replace
//! universe nodes in the household construction.

use crate::error::GraphError;
use crate::graph::simple::{NodeId, SimpleGraph};

/// Largest custom template the brute-force automorphism check accepts.
pub const MAX_CUSTOM_TEMPLATE: u32 = 8;

/// A connected graph in which all node pairs are exchangeable by some
/// automorphism. Cliques and rings are automorphic by construction; custom
/// templates are verified by brute force at build time.
///
/// A ring of size `k` places `k` nodes on a circle, each adjacent to its
/// four nearest neighbors. For `k <= 5` that is the complete graph, so
/// such rings normalize to cliques.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CommunityTemplate {
    Clique(u32),
    Ring(u32),
    Custom(CustomTemplate),
}

/// Validated custom template: connected, automorphic, size at most
/// [`MAX_CUSTOM_TEMPLATE`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CustomTemplate {
    size: u32,
    edges: Vec<(NodeId, NodeId)>,
}

impl CustomTemplate {
    pub fn size(&self) -> u32 {
        self.size
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }
}

impl CommunityTemplate {
    pub fn clique(k: u32) -> Self {
        assert!(k >= 1, "clique size must be positive");
        CommunityTemplate::Clique(k)
    }

    /// Ring of size `k`; sizes up to five collapse to cliques.
    pub fn ring(k: u32) -> Self {
        assert!(k >= 1, "ring size must be positive");
        if k <= 5 {
            CommunityTemplate::Clique(k)
        } else {
            CommunityTemplate::Ring(k)
        }
    }

    /// Builds and validates a custom template from its edge list.
    pub fn custom(size: u32, edges: &[(NodeId, NodeId)]) -> Result<Self, GraphError> {
        if size > MAX_CUSTOM_TEMPLATE {
            return Err(GraphError::TemplateTooLarge {
                max: MAX_CUSTOM_TEMPLATE,
                got: size,
            });
        }
        if size == 0 {
            return Err(GraphError::NotAutomorphic("empty template".into()));
        }
        let mut sorted: Vec<(NodeId, NodeId)> = edges
            .iter()
            .map(|&(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        sorted.sort_unstable();
        let g = SimpleGraph::from_edges(size as usize, &sorted)?;
        if !g.is_connected() {
            return Err(GraphError::NotAutomorphic(
                "template is disconnected".into(),
            ));
        }
        if !is_vertex_transitive(&g) {
            return Err(GraphError::NotAutomorphic(
                "node pairs are not all automorphically equivalent".into(),
            ));
        }
        Ok(CommunityTemplate::Custom(CustomTemplate {
            size,
            edges: sorted,
        }))
    }

    pub fn size(&self) -> u32 {
        match self {
            CommunityTemplate::Clique(k) | CommunityTemplate::Ring(k) => *k,
            CommunityTemplate::Custom(c) => c.size,
        }
    }

    /// The template subgraph on nodes `0..size`.
    pub fn adjacency(&self) -> SimpleGraph {
        let k = self.size();
        let edges: Vec<(NodeId, NodeId)> = match self {
            CommunityTemplate::Clique(_) => (0..k)
                .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
                .collect(),
            CommunityTemplate::Ring(_) => ring_edges(k),
            CommunityTemplate::Custom(c) => c.edges.clone(),
        };
        SimpleGraph::from_edges(k as usize, &edges).expect("template edges are simple")
    }

    /// Short label used in CSV output, e.g. `C3` or `R7`.
    pub fn label(&self) -> String {
        match self {
            CommunityTemplate::Clique(k) => format!("C{k}"),
            CommunityTemplate::Ring(k) => format!("R{k}"),
            CommunityTemplate::Custom(c) => format!("X{}", c.size),
        }
    }
}

impl std::fmt::Display for CommunityTemplate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

/// Edges of the ring community: node `i` adjacent to `i +- 1` and `i +- 2`
/// modulo `k`. Callers guarantee `k >= 6`; smaller rings are cliques.
fn ring_edges(k: u32) -> Vec<(NodeId, NodeId)> {
    let mut edges = Vec::with_capacity(2 * k as usize);
    for i in 0..k {
        for step in [1u32, 2] {
            let j = (i + step) % k;
            let (a, b) = if i < j { (i, j) } else { (j, i) };
            edges.push((a, b));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Checks vertex transitivity by searching, for every target node, an
/// automorphism that maps node 0 onto it. Backtracking over candidate
/// images keeps this comfortably fast for the sizes we accept.
pub(crate) fn is_vertex_transitive(g: &SimpleGraph) -> bool {
    let n = g.node_count();
    (1..n as NodeId).all(|target| {
        let mut image = vec![u32::MAX; n];
        let mut used = vec![false; n];
        image[0] = target;
        used[target as usize] = true;
        extend_automorphism(g, 1, &mut image, &mut used)
    })
}

fn extend_automorphism(g: &SimpleGraph, next: usize, image: &mut [u32], used: &mut [bool]) -> bool {
    let n = g.node_count();
    if next == n {
        return true;
    }
    let v = next as NodeId;
    for candidate in 0..n as NodeId {
        if used[candidate as usize] || g.degree(candidate) != g.degree(v) {
            continue;
        }
        // Adjacency with every already-placed node must be preserved.
        let consistent = (0..next as NodeId)
            .all(|placed| g.has_edge(v, placed) == g.has_edge(candidate, image[placed as usize]));
        if !consistent {
            continue;
        }
        image[next] = candidate;
        used[candidate as usize] = true;
        if extend_automorphism(g, next + 1, image, used) {
            return true;
        }
        used[candidate as usize] = false;
        image[next] = u32::MAX;
    }
    false
}
