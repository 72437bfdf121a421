//! Quick walk-throughput measurement on a mid-sized household model.

use hhwalk::graph::{
    expand_household, sample_poisson_degrees, sample_universe_configuration_model,
    CommunityTemplate, DEFAULT_CONFIG_MODEL_RETRIES,
};
use hhwalk::walk::{run_walk, Node2vecParams, WalkStart};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let degrees = sample_poisson_degrees(1000, 4.0, &mut rng).unwrap();
    let universe =
        sample_universe_configuration_model(&degrees, &mut rng, DEFAULT_CONFIG_MODEL_RETRIES)
            .unwrap();
    let hh = expand_household(&universe, CommunityTemplate::clique).unwrap();
    println!(
        "graph: {} nodes, {} edges",
        hh.node_count(),
        hh.graph().edge_count()
    );
    let params = Node2vecParams::new(1.0, 2.0, 0.5).unwrap();
    let steps = 50_000_000u64;
    let start = Instant::now();
    let counts = run_walk(&hh, &params, WalkStart::UniformEdge, steps, &mut rng).unwrap();
    let dt = start.elapsed().as_secs_f64();
    println!(
        "{steps} steps in {dt:.2} s: {:.1}M steps/s (checksum {})",
        steps as f64 / dt / 1e6,
        counts.node_visits().iter().sum::<u64>()
    );
}
