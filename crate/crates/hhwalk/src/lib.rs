//! Second-order (node2vec) random walks on household-model graphs.
//!
//! A household model replaces every node of a *universe graph* by a small,
//! vertex-transitive community (a clique or a ring, say) whose size equals
//! the node's degree, and gives every community member exactly one outside
//! edge, its *arm*. The node2vec walk on such a graph has a stationary
//! distribution that can be written down explicitly in terms of one scalar
//! per community type: the expected sojourn time, the number of jumps the
//! walk makes inside a community per visit.
//!
//! The crate computes that distribution along three mutually validating
//! routes:
//!
//! * [`sojourn::stationary_household`] assembles it from closed-form or
//!   exactly solved sojourn expectations,
//! * [`oracle`] solves the walk's Markov chain on directed edges by linear
//!   algebra and projects edge probabilities onto nodes,
//! * [`walk`] simulates the walk and measures empirical occupancy.
//!
//! The three agree to solver precision (exact routes) or to Monte-Carlo
//! precision (simulation), which is what the test suite checks end to end.
//!
//! ```
//! use hhwalk::graph::{expand_household, CommunityTemplate, UniverseGraph};
//! use hhwalk::sojourn::{stationary_household, stationary_srw};
//! use hhwalk::walk::Node2vecParams;
//!
//! // K4 universe: four communities of three nodes each.
//! let universe = UniverseGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
//! let household = expand_household(&universe, |d| CommunityTemplate::clique(d))?;
//! assert_eq!(household.graph().node_count(), 12);
//!
//! // With beta == gamma the walk distributes like the simple random walk.
//! let params = Node2vecParams::new(2.0, 1.0, 1.0)?;
//! let pi = stationary_household(&household, &params)?;
//! assert!(pi.max_abs_diff(&stationary_srw(household.graph())) < 1e-12);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod dist;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod sojourn;
pub mod walk;

pub use dist::{EdgeStationaryDistribution, StationaryDistribution};
pub use error::{AnalyticsError, GraphError, OracleError, WalkError};
pub use graph::{
    CommunityTemplate, DegreeSequence, HouseholdGraph, NodeId, SimpleGraph, UniverseGraph,
};
pub use walk::{Node2vecParams, WalkState};
