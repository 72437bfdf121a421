//! Household model expansion and validation.

use std::collections::HashSet;
use std::ops::Range;

use crate::error::GraphError;
use crate::graph::simple::{NodeId, SimpleGraph};
use crate::graph::template::CommunityTemplate;
use crate::graph::universe::UniverseGraph;

/// One community of the household graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityInfo {
    pub template: CommunityTemplate,
    /// Members occupy a contiguous id block, in universe-node order.
    pub members: Range<NodeId>,
    pub universe_node: NodeId,
}

impl CommunityInfo {
    pub fn size(&self) -> u32 {
        self.members.end - self.members.start
    }
}

/// A household model: every universe node of degree `d` became a community
/// of `d` members, each member carrying exactly one outside edge (its arm),
/// and the arms realize the universe edges one to one.
#[derive(Debug, Clone)]
pub struct HouseholdGraph {
    graph: SimpleGraph,
    community_of: Vec<NodeId>,
    arm_of: Vec<NodeId>,
    communities: Vec<CommunityInfo>,
    universe: UniverseGraph,
}

impl HouseholdGraph {
    /// Assembles a household graph from raw parts without checking the
    /// household invariants; [`validate_household`] reports on them. The
    /// arm table is recomputed leniently (first neighbor outside the own
    /// community, or the node itself when there is none).
    pub fn from_parts(
        graph: SimpleGraph,
        community_of: Vec<NodeId>,
        communities: Vec<CommunityInfo>,
        universe: UniverseGraph,
    ) -> Self {
        assert_eq!(graph.node_count(), community_of.len());
        let arm_of = (0..graph.node_count() as NodeId)
            .map(|v| {
                graph
                    .neighbors(v)
                    .iter()
                    .copied()
                    .find(|&w| community_of[w as usize] != community_of[v as usize])
                    .unwrap_or(v)
            })
            .collect();
        Self {
            graph,
            community_of,
            arm_of,
            communities,
            universe,
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn universe(&self) -> &UniverseGraph {
        &self.universe
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    /// Community id of a node; community ids equal universe node ids.
    pub fn community_of(&self, v: NodeId) -> NodeId {
        self.community_of[v as usize]
    }

    pub fn community_map(&self) -> &[NodeId] {
        &self.community_of
    }

    /// The unique neighbor of `v` outside its own community.
    pub fn arm_of(&self, v: NodeId) -> NodeId {
        self.arm_of[v as usize]
    }

    pub fn communities(&self) -> &[CommunityInfo] {
        &self.communities
    }

    pub fn community(&self, id: NodeId) -> &CommunityInfo {
        &self.communities[id as usize]
    }

    pub fn template_of_node(&self, v: NodeId) -> &CommunityTemplate {
        &self.communities[self.community_of(v) as usize].template
    }

    /// Sorted-list intersection of the two neighborhoods.
    pub fn common_neighbors(&self, u: NodeId, v: NodeId) -> Vec<NodeId> {
        self.graph.common_neighbors(u, v)
    }
}

/// Expands a universe graph into its household model. `template_for` maps
/// each universe degree to the community template to use; the template size
/// must equal the degree.
///
/// Member `j` of the community of universe node `v` takes the arm to the
/// `j`-th neighbor of `v` in sorted order. The communities are automorphic,
/// so any other matching gives an isomorphic graph; this one is
/// deterministic.
pub fn expand_household<F>(
    universe: &UniverseGraph,
    template_for: F,
) -> Result<HouseholdGraph, GraphError>
where
    F: Fn(u32) -> CommunityTemplate,
{
    let n = universe.node_count();
    let mut communities = Vec::with_capacity(n);
    let mut community_of = Vec::new();
    let mut offsets = Vec::with_capacity(n + 1);
    let mut next_id: NodeId = 0;

    for v in 0..n as NodeId {
        let degree = universe.degree(v);
        if degree == 0 {
            return Err(GraphError::InvalidDegreeSequence(format!(
                "universe node {v} has degree 0, no community size to assign"
            )));
        }
        let template = template_for(degree);
        if template.size() != degree {
            return Err(GraphError::TemplateSizeMismatch {
                expected: degree,
                got: template.size(),
            });
        }
        offsets.push(next_id);
        communities.push(CommunityInfo {
            template,
            members: next_id..next_id + degree,
            universe_node: v,
        });
        community_of.extend(std::iter::repeat(v).take(degree as usize));
        next_id += degree;
    }
    offsets.push(next_id);

    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    // Internal community edges, shifted to the member id block.
    for info in &communities {
        let base = info.members.start;
        for (a, b) in info.template.adjacency().edges() {
            edges.push((base + a, base + b));
        }
    }
    // One arm per universe edge: member ranks are the positions of the
    // other endpoint in each endpoint's sorted neighbor list.
    for (u, v) in universe.graph().edges() {
        let rank_in_u = universe
            .graph()
            .neighbors(u)
            .binary_search(&v)
            .expect("edge endpoint");
        let rank_in_v = universe
            .graph()
            .neighbors(v)
            .binary_search(&u)
            .expect("edge endpoint");
        edges.push((
            offsets[u as usize] + rank_in_u as NodeId,
            offsets[v as usize] + rank_in_v as NodeId,
        ));
    }

    let graph = SimpleGraph::from_edges(next_id as usize, &edges)?;
    Ok(HouseholdGraph::from_parts(
        graph,
        community_of,
        communities,
        universe.clone(),
    ))
}

/// A single violated household invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Disconnected,
    NoTriangle,
    /// A member has a number of outside edges different from one.
    ArmCount {
        node: NodeId,
        arms: usize,
    },
    /// Community size differs from the universe degree.
    CommunitySize {
        community: NodeId,
        size: u32,
        universe_degree: u32,
    },
    /// The arms of one community do not reach exactly its universe
    /// neighbors, one community each.
    ArmTargets {
        community: NodeId,
    },
    /// More than one member of a community is adjacent to some single
    /// neighboring community.
    NeighborNodeNotUnique {
        community: NodeId,
        neighbor: NodeId,
    },
    /// A member's internal neighborhood does not match the template.
    TemplateMismatch {
        community: NodeId,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Disconnected => write!(f, "household graph is disconnected"),
            Violation::NoTriangle => write!(f, "household graph contains no triangle"),
            Violation::ArmCount { node, arms } => {
                write!(
                    f,
                    "node {node} has {arms} outside edges, expected exactly 1"
                )
            }
            Violation::CommunitySize {
                community,
                size,
                universe_degree,
            } => write!(
                f,
                "community {community} has {size} members but universe degree {universe_degree}"
            ),
            Violation::ArmTargets { community } => write!(
                f,
                "arms of community {community} do not match its universe edges"
            ),
            Violation::NeighborNodeNotUnique {
                community,
                neighbor,
            } => write!(
                f,
                "community {community} touches community {neighbor} through more than one node"
            ),
            Violation::TemplateMismatch { community } => write!(
                f,
                "internal edges of community {community} do not match its template"
            ),
        }
    }
}

/// Result of checking all household invariants. Violations are reported,
/// not thrown, so diagnostic tools can list everything at once.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every household invariant against the actual graph structure.
pub fn validate_household(g: &HouseholdGraph) -> ValidationReport {
    let mut violations = Vec::new();
    let graph = g.graph();
    let universe = g.universe();

    if !graph.is_connected() {
        violations.push(Violation::Disconnected);
    }
    if !graph.contains_triangle() {
        violations.push(Violation::NoTriangle);
    }

    for v in 0..graph.node_count() as NodeId {
        let arms = graph
            .neighbors(v)
            .iter()
            .filter(|&&w| g.community_of(w) != g.community_of(v))
            .count();
        if arms != 1 {
            violations.push(Violation::ArmCount { node: v, arms });
        }
    }

    for info in g.communities() {
        let id = info.universe_node;
        let degree = universe.degree(id);
        if info.size() != degree {
            violations.push(Violation::CommunitySize {
                community: id,
                size: info.size(),
                universe_degree: degree,
            });
        }

        // Template check: internal adjacency must equal the template graph
        // under the member id shift.
        let base = info.members.start;
        let template = info.template.adjacency();
        let internal_ok = info.members.clone().all(|v| {
            let got: Vec<NodeId> = graph
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| g.community_of(w) == id)
                .collect();
            let want: Vec<NodeId> = template
                .neighbors(v - base)
                .iter()
                .map(|&w| w + base)
                .collect();
            got == want
        });
        if !internal_ok {
            violations.push(Violation::TemplateMismatch { community: id });
        }

        // Arms must reach each universe neighbor exactly once.
        let mut reached: Vec<NodeId> = Vec::new();
        let mut per_neighbor_members: Vec<(NodeId, NodeId)> = Vec::new();
        for v in info.members.clone() {
            for &w in graph.neighbors(v) {
                let c = g.community_of(w);
                if c != id {
                    reached.push(c);
                    per_neighbor_members.push((c, v));
                }
            }
        }
        reached.sort_unstable();
        let expected: Vec<NodeId> = universe.graph().neighbors(id).to_vec();
        if reached != expected {
            violations.push(Violation::ArmTargets { community: id });
        }
        // Uniqueness of the contact node per neighboring community.
        let mut seen: HashSet<(NodeId, NodeId)> = HashSet::new();
        let mut contact_count: std::collections::HashMap<NodeId, HashSet<NodeId>> =
            std::collections::HashMap::new();
        for (c, v) in per_neighbor_members {
            seen.insert((c, v));
            contact_count.entry(c).or_default().insert(v);
        }
        for (c, members) in contact_count {
            if members.len() > 1 {
                violations.push(Violation::NeighborNodeNotUnique {
                    community: id,
                    neighbor: c,
                });
            }
        }
    }

    ValidationReport { violations }
}

/// Contracts each community to a single node and returns the quotient
/// graph, which must reproduce the universe for a valid household model.
pub fn contract_to_universe(g: &HouseholdGraph) -> Result<SimpleGraph, GraphError> {
    let mut edges: Vec<(NodeId, NodeId)> = g
        .graph()
        .edges()
        .filter_map(|(u, v)| {
            let (cu, cv) = (g.community_of(u), g.community_of(v));
            (cu != cv).then_some(if cu < cv { (cu, cv) } else { (cv, cu) })
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();
    SimpleGraph::from_edges(g.universe().node_count(), &edges)
}
