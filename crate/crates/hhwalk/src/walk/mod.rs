//! Simulation of the second-order walk: stepping, occupancy statistics,
//! the collapsed community walk, and sojourn sampling.

mod kernel;
mod occupancy;
mod params;
mod sojourn_sampler;
mod ystar;

pub use kernel::{step, transition_weights, uniform_start, Walker};
pub use occupancy::{
    empirical_node_distribution, run_walk, run_walk_recording, run_walks_parallel,
    write_trajectory_csv, OccupancyCounts, WalkStart,
};
pub use params::{Node2vecParams, WalkState};
pub use sojourn_sampler::{community_gadget, sample_sojourn, SojournSample};
pub use ystar::{collapse_to_ystar, extract_universe_trace, run_ystar_occupancy};
