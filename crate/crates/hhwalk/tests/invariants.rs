//! Property tests for the structural invariants.

use hhwalk::graph::{
    contract_to_universe, expand_household, read_edge_list, sample_poisson_degrees,
    sample_universe_configuration_model, validate_household, write_edge_list, CommunityTemplate,
};
use hhwalk::oracle::{build_edge_chain, project_edges_to_nodes, solve_stationary, SolveMethod};
use hhwalk::sojourn::{sojourn_pmf_clique, sojourn_pmf_ring};
use hhwalk::walk::{run_walk, Node2vecParams, WalkStart};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn random_household(n: usize, seed: u64) -> Option<hhwalk::HouseholdGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degrees = sample_poisson_degrees(n, 3.0, &mut rng).ok()?;
    let universe = sample_universe_configuration_model(&degrees, &mut rng, 200).ok()?;
    expand_household(&universe, CommunityTemplate::clique).ok()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn expansion_round_trips_to_the_universe(n in 4usize..16, seed in 0u64..10_000) {
        if let Some(hh) = random_household(n, seed) {
            prop_assert!(validate_household(&hh).violations.iter().all(
                |v| matches!(v, hhwalk::graph::Violation::NoTriangle)
            ));
            let contracted = contract_to_universe(&hh).unwrap();
            prop_assert_eq!(&contracted, hh.universe().graph());
            // Degree law: a node in a clique community of size k has
            // household degree k.
            for info in hh.communities() {
                for v in info.members.clone() {
                    prop_assert_eq!(hh.graph().degree(v) as u32, info.size());
                }
            }
            // Edge count identity for all-clique households.
            let sum_sq: u64 = hh
                .communities()
                .iter()
                .map(|c| (c.size() as u64).pow(2))
                .sum();
            prop_assert_eq!(2 * hh.graph().edge_count() as u64, sum_sq);
        }
    }

    #[test]
    fn edge_list_io_round_trips(n in 4usize..16, seed in 0u64..10_000) {
        if let Some(hh) = random_household(n, seed) {
            let mut buf = Vec::new();
            write_edge_list(hh.graph(), &mut buf).unwrap();
            let back = read_edge_list(buf.as_slice()).unwrap();
            prop_assert_eq!(&back, hh.graph());
        }
    }

    #[test]
    fn occupancy_counters_always_sum_to_steps(
        seed in 0u64..10_000,
        steps in 1u64..2000,
        alpha in 0.1f64..5.0,
        beta in 0.1f64..5.0,
        gamma in 0.1f64..5.0,
    ) {
        if let Some(hh) = random_household(6, seed) {
            let p = Node2vecParams::new(alpha, beta, gamma).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabcd);
            let counts = run_walk(&hh, &p, WalkStart::UniformEdge, steps, &mut rng).unwrap();
            prop_assert_eq!(counts.node_visits().iter().sum::<u64>(), steps);
            prop_assert_eq!(counts.edge_visits().iter().sum::<u64>(), steps);
            prop_assert_eq!(counts.community_visits().iter().sum::<u64>(), steps);
        }
    }

    #[test]
    fn clique_pmf_normalizes(
        k in 2u32..9,
        alpha in 0.1f64..8.0,
        beta in 0.1f64..8.0,
        gamma in 0.1f64..8.0,
    ) {
        let p = Node2vecParams::new(alpha, beta, gamma).unwrap();
        let mut total = 0.0;
        let mut l = 1u32;
        // Stop once the geometric tail is negligible.
        loop {
            let term = sojourn_pmf_clique(k, &p, l).unwrap();
            total += term;
            if (l > 2 && term < 1e-16) || l > 500_000 {
                break;
            }
            l += 1;
        }
        prop_assert!((total - 1.0).abs() < 1e-9, "k={} total={}", k, total);
    }

    #[test]
    fn ring_pmf_normalizes(
        alpha in 0.1f64..8.0,
        beta in 0.1f64..8.0,
        gamma in 0.1f64..8.0,
    ) {
        let p = Node2vecParams::new(alpha, beta, gamma).unwrap();
        let mut total = 0.0;
        let mut m = 1u32;
        loop {
            let term = sojourn_pmf_ring(7, &p, m).unwrap();
            total += term;
            if (m > 2 && term < 1e-16) || m > 500_000 {
                break;
            }
            m += 1;
        }
        prop_assert!((total - 1.0).abs() < 1e-9, "total={}", total);
    }

    #[test]
    fn oracle_distributions_normalize_and_flatten_communities(
        seed in 0u64..2_000,
        alpha in 0.2f64..4.0,
        beta in 0.2f64..4.0,
        gamma in 0.2f64..4.0,
    ) {
        if let Some(hh) = random_household(6, seed) {
            if !hh.graph().contains_triangle() {
                return Ok(());
            }
            let p = Node2vecParams::new(alpha, beta, gamma).unwrap();
            let chain = build_edge_chain(hh.graph(), &p).unwrap();
            let pi = solve_stationary(&chain, SolveMethod::DirectSolve, 0.0).unwrap();
            prop_assert!((pi.sum() - 1.0).abs() < 1e-9);
            prop_assert!(chain.balance_residual(&pi) < 1e-12);
            let nodes = project_edges_to_nodes(&pi, &chain);
            for info in hh.communities() {
                let first = nodes.get(info.members.start);
                for v in info.members.clone() {
                    prop_assert!((nodes.get(v) - first).abs() < 1e-10);
                }
            }
        }
    }
}
