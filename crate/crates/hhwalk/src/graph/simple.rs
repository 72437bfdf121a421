//! Compact undirected simple graph with sorted adjacency.

use crate::error::GraphError;

/// Node identifier. Graphs here are desk scale, u32 is plenty.
pub type NodeId = u32;

/// An undirected simple graph in CSR form: neighbor lists are sorted and
/// stored back to back, so adjacency tests are binary searches and
/// neighbor scans are cache-friendly.
///
/// Directed edges get stable ids: edge `(u, v)` has id
/// `offset(u) + rank of v among u's neighbors`. Both orientations of an
/// undirected edge are distinct directed edges, so there are `2|E|` ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    offsets: Vec<usize>,
    targets: Vec<NodeId>,
}

impl SimpleGraph {
    /// Builds a graph from undirected edges. Rejects self-loops, duplicate
    /// edges (in either orientation) and out-of-range endpoints.
    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Self, GraphError> {
        let mut adjacency: Vec<Vec<NodeId>> = vec![Vec::new(); node_count];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::NotSimple(format!("self-loop at node {u}")));
            }
            for node in [u, v] {
                if node as usize >= node_count {
                    return Err(GraphError::NodeOutOfRange { node, node_count });
                }
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        let mut offsets = Vec::with_capacity(node_count + 1);
        let mut targets = Vec::with_capacity(2 * edges.len());
        offsets.push(0);
        for (u, mut list) in adjacency.into_iter().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(GraphError::NotSimple(format!("duplicate edge at node {u}")));
            }
            targets.extend_from_slice(&list);
            offsets.push(targets.len());
        }
        Ok(Self { offsets, targets })
    }

    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.targets.len() / 2
    }

    /// Number of directed edges, `2|E|`.
    pub fn directed_edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.offsets[v as usize + 1] - self.offsets[v as usize]
    }

    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.targets[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Nodes adjacent to both `u` and `v`, by sorted-list intersection.
    pub fn common_neighbors(&self, u: NodeId, v: NodeId) -> Vec<NodeId> {
        debug_assert_ne!(u, v);
        let (mut a, mut b) = (self.neighbors(u).iter(), self.neighbors(v).iter());
        let mut out = Vec::new();
        let (mut x, mut y) = (a.next(), b.next());
        while let (Some(&p), Some(&q)) = (x, y) {
            match p.cmp(&q) {
                std::cmp::Ordering::Less => x = a.next(),
                std::cmp::Ordering::Greater => y = b.next(),
                std::cmp::Ordering::Equal => {
                    out.push(p);
                    x = a.next();
                    y = b.next();
                }
            }
        }
        out
    }

    /// Undirected edges, each listed once with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count() as NodeId).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    /// All directed edges in id order.
    pub fn directed_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count() as NodeId)
            .flat_map(move |u| self.neighbors(u).iter().map(move |&v| (u, v)))
    }

    /// First directed-edge id with source `v`; ids of edges out of `v` are
    /// `offset + rank` over the sorted neighbor list.
    pub fn directed_edge_offset(&self, v: NodeId) -> usize {
        self.offsets[v as usize]
    }

    /// Id of the directed edge `(u, v)`, if present.
    pub fn directed_edge_id(&self, u: NodeId, v: NodeId) -> Option<usize> {
        self.neighbors(u)
            .binary_search(&v)
            .ok()
            .map(|rank| self.offsets[u as usize] + rank)
    }

    /// The directed edge with the given id.
    pub fn directed_edge_at(&self, id: usize) -> (NodeId, NodeId) {
        debug_assert!(id < self.targets.len());
        // offsets is nondecreasing; the source is the last node whose
        // offset is <= id.
        let u = self.offsets.partition_point(|&o| o <= id) - 1;
        (u as NodeId, self.targets[id])
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0 as NodeId];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in self.neighbors(u) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    pub fn contains_triangle(&self) -> bool {
        self.edges()
            .any(|(u, v)| !self.common_neighbors(u, v).is_empty())
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.node_count() as NodeId)
            .map(|v| self.degree(v) as u32)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> SimpleGraph {
        SimpleGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn csr_layout_and_queries() {
        let g = k4();
        assert_eq!(g.node_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.directed_edge_count(), 12);
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert!(g.has_edge(3, 1));
        assert!(!g.has_edge(0, 0));
        assert!(g.is_connected());
        assert!(g.contains_triangle());
    }

    #[test]
    fn rejects_self_loop_and_duplicate() {
        assert!(matches!(
            SimpleGraph::from_edges(2, &[(0, 0)]),
            Err(GraphError::NotSimple(_))
        ));
        assert!(matches!(
            SimpleGraph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(GraphError::NotSimple(_))
        ));
    }

    #[test]
    fn directed_edge_ids_round_trip() {
        let g = k4();
        for (id, (u, v)) in g.directed_edges().enumerate() {
            assert_eq!(g.directed_edge_id(u, v), Some(id));
            assert_eq!(g.directed_edge_at(id), (u, v));
        }
        assert_eq!(g.directed_edge_id(0, 0), None);
    }

    #[test]
    fn common_neighbors_in_clique() {
        let g = k4();
        assert_eq!(g.common_neighbors(0, 1), vec![2, 3]);
    }

    #[test]
    fn path_has_no_triangle() {
        let g = SimpleGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!g.contains_triangle());
        assert!(g.is_connected());
        assert_eq!(g.common_neighbors(0, 2), vec![1]);
    }
}
