//! Long walks and their occupancy statistics.

use std::io::Write;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dist::StationaryDistribution;
use crate::error::WalkError;
use crate::graph::{HouseholdGraph, NodeId};
use crate::walk::kernel::{uniform_start, Walker};
use crate::walk::params::{Node2vecParams, WalkState};

/// Where a walk starts: a uniformly chosen directed edge (the default) or
/// an explicit state.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum WalkStart {
    #[default]
    UniformEdge,
    State(WalkState),
}

/// Visit counters of a walk. Every step increments the node, directed-edge
/// and community counter of the state it lands on, so each family of
/// counters sums to the number of steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccupancyCounts {
    steps_total: u64,
    node_visits: Vec<u64>,
    edge_visits: Vec<u64>,
    community_visits: Vec<u64>,
}

impl OccupancyCounts {
    fn new(node_count: usize, directed_edge_count: usize, community_count: usize) -> Self {
        Self {
            steps_total: 0,
            node_visits: vec![0; node_count],
            edge_visits: vec![0; directed_edge_count],
            community_visits: vec![0; community_count],
        }
    }

    pub fn steps_total(&self) -> u64 {
        self.steps_total
    }

    pub fn node_visits(&self) -> &[u64] {
        &self.node_visits
    }

    /// Indexed by directed-edge id of the household graph.
    pub fn edge_visits(&self) -> &[u64] {
        &self.edge_visits
    }

    pub fn community_visits(&self) -> &[u64] {
        &self.community_visits
    }

    /// Merges counters of an independent walk, by addition.
    pub fn merge(&mut self, other: &OccupancyCounts) {
        assert_eq!(self.node_visits.len(), other.node_visits.len());
        self.steps_total += other.steps_total;
        for (a, b) in self.node_visits.iter_mut().zip(&other.node_visits) {
            *a += b;
        }
        for (a, b) in self.edge_visits.iter_mut().zip(&other.edge_visits) {
            *a += b;
        }
        for (a, b) in self
            .community_visits
            .iter_mut()
            .zip(&other.community_visits)
        {
            *a += b;
        }
    }

    /// `node,community,visits,frequency` rows.
    pub fn write_csv<W: Write>(&self, g: &HouseholdGraph, mut w: W) -> std::io::Result<()> {
        writeln!(w, "node,community,visits,frequency")?;
        let t = self.steps_total.max(1) as f64;
        for (node, &visits) in self.node_visits.iter().enumerate() {
            writeln!(
                w,
                "{node},{},{visits},{}",
                g.community_of(node as NodeId),
                visits as f64 / t
            )?;
        }
        Ok(())
    }
}

/// Node visit frequencies as a probability vector.
pub fn empirical_node_distribution(counts: &OccupancyCounts) -> StationaryDistribution {
    assert!(counts.steps_total >= 1, "need at least one step");
    StationaryDistribution::from_unnormalized(
        counts.node_visits.iter().map(|&c| c as f64).collect(),
    )
}

fn resolve_start<R: rand::Rng + ?Sized>(
    g: &HouseholdGraph,
    start: WalkStart,
    rng: &mut R,
) -> WalkState {
    match start {
        WalkStart::UniformEdge => uniform_start(g.graph(), rng),
        WalkStart::State(s) => s,
    }
}

/// Runs `steps` walk steps and counts visits. The start state itself is not
/// counted; after one step exactly one node has been counted.
pub fn run_walk<R: rand::Rng + ?Sized>(
    g: &HouseholdGraph,
    params: &Node2vecParams,
    start: WalkStart,
    steps: u64,
    rng: &mut R,
) -> Result<OccupancyCounts, WalkError> {
    let mut counts = OccupancyCounts::new(
        g.node_count(),
        g.graph().directed_edge_count(),
        g.communities().len(),
    );
    let state = resolve_start(g, start, rng);
    let mut walker = Walker::with_state(g.graph(), *params, state, rng);
    for _ in 0..steps {
        let (state, rank) = walker.step()?;
        counts.node_visits[state.cur as usize] += 1;
        counts.edge_visits[g.graph().directed_edge_offset(state.prev) + rank] += 1;
        counts.community_visits[g.community_of(state.cur) as usize] += 1;
        counts.steps_total += 1;
    }
    Ok(counts)
}

/// Runs one walk and records the visited states, for trajectory dumps.
pub fn run_walk_recording<R: rand::Rng + ?Sized>(
    g: &HouseholdGraph,
    params: &Node2vecParams,
    start: WalkStart,
    steps: u64,
    rng: &mut R,
) -> Result<(OccupancyCounts, Vec<WalkState>), WalkError> {
    let mut counts = OccupancyCounts::new(
        g.node_count(),
        g.graph().directed_edge_count(),
        g.communities().len(),
    );
    let state = resolve_start(g, start, rng);
    let mut trajectory = Vec::with_capacity(steps as usize + 1);
    trajectory.push(state);
    let mut walker = Walker::with_state(g.graph(), *params, state, rng);
    for _ in 0..steps {
        let (state, _) = walker.step()?;
        trajectory.push(state);
        counts.node_visits[state.cur as usize] += 1;
        counts.edge_visits[g
            .graph()
            .directed_edge_id(state.prev, state.cur)
            .expect("walk states are directed edges")] += 1;
        counts.community_visits[g.community_of(state.cur) as usize] += 1;
        counts.steps_total += 1;
    }
    Ok((counts, trajectory))
}

/// Runs independent walkers in parallel on disjoint ChaCha8 streams of one
/// seed, and merges their counters by addition.
pub fn run_walks_parallel(
    g: &HouseholdGraph,
    params: &Node2vecParams,
    start: WalkStart,
    steps_per_walk: u64,
    seed: u64,
    walkers: usize,
) -> Result<OccupancyCounts, WalkError> {
    assert!(walkers >= 1, "need at least one walker");
    let partials: Result<Vec<OccupancyCounts>, WalkError> = (0..walkers as u64)
        .into_par_iter()
        .map(|stream| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(stream);
            run_walk(g, params, start, steps_per_walk, &mut rng)
        })
        .collect();
    let mut partials = partials?;
    let mut merged = partials.pop().expect("at least one walker");
    for p in &partials {
        merged.merge(p);
    }
    Ok(merged)
}

/// `step,prev,cur` rows, truncated to `max_rows`.
pub fn write_trajectory_csv<W: Write>(
    trajectory: &[WalkState],
    max_rows: usize,
    mut w: W,
) -> std::io::Result<()> {
    writeln!(w, "step,prev,cur")?;
    for (i, s) in trajectory.iter().take(max_rows).enumerate() {
        writeln!(w, "{i},{},{}", s.prev, s.cur)?;
    }
    Ok(())
}
