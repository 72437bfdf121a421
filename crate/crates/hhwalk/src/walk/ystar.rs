//! The collapsed community-level walk.
//!
//! Mapping every walk position to its community and deleting consecutive
//! repeats yields a walk on the universe graph whose directed-edge
//! stationary law is uniform, hence degree-proportional on universe nodes.

use rand::Rng;

use crate::error::WalkError;
use crate::graph::{HouseholdGraph, NodeId};
use crate::walk::kernel::Walker;
use crate::walk::occupancy::WalkStart;
use crate::walk::params::Node2vecParams;

/// Maps a node trajectory to the sequence of visited community ids.
pub fn extract_universe_trace(trajectory: &[NodeId], g: &HouseholdGraph) -> Vec<NodeId> {
    trajectory.iter().map(|&v| g.community_of(v)).collect()
}

/// Removes consecutive duplicates only; `[A,A,A,B,B,A]` becomes `[A,B,A]`.
pub fn collapse_to_ystar(sequence: &[NodeId]) -> Vec<NodeId> {
    let mut out = Vec::new();
    for &c in sequence {
        if out.last() != Some(&c) {
            out.push(c);
        }
    }
    out
}

/// Streams the household walk until the collapsed walk has made
/// `transitions` moves, counting how often it lands on each universe node.
/// Equivalent to collapsing a recorded trajectory, without storing it.
pub fn run_ystar_occupancy<R: Rng + ?Sized>(
    g: &HouseholdGraph,
    params: &Node2vecParams,
    start: WalkStart,
    transitions: u64,
    rng: &mut R,
) -> Result<Vec<u64>, WalkError> {
    let mut counts = vec![0u64; g.universe().node_count()];
    let state = match start {
        WalkStart::UniformEdge => crate::walk::kernel::uniform_start(g.graph(), rng),
        WalkStart::State(s) => s,
    };
    let mut current_community = g.community_of(state.cur);
    let mut walker = Walker::with_state(g.graph(), *params, state, rng);
    let mut moves = 0u64;
    while moves < transitions {
        let (state, _) = walker.step()?;
        let community = g.community_of(state.cur);
        if community != current_community {
            current_community = community;
            counts[community as usize] += 1;
            moves += 1;
        }
    }
    Ok(counts)
}
