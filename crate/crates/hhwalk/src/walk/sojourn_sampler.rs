//! Monte-Carlo sampling of community sojourn times.
//!
//! The walk's behavior from entry until the exit jump depends only on the
//! community subgraph and the entering arm, so sampling runs on an isolated
//! gadget: the template plus one pendant arm node per member. The entering
//! jump counts as step one; the exiting jump is not counted.

use rand::Rng;

use crate::error::WalkError;
use crate::graph::{CommunityTemplate, NodeId, SimpleGraph};
use crate::walk::kernel::Walker;
use crate::walk::params::{Node2vecParams, WalkState};

/// A community template with one pendant arm per member. Members keep the
/// template ids `0..k`; the arm of member `i` is node `k + i`.
pub fn community_gadget(template: &CommunityTemplate) -> SimpleGraph {
    let k = template.size();
    let mut edges: Vec<(NodeId, NodeId)> = template.adjacency().edges().collect();
    for i in 0..k {
        edges.push((i, k + i));
    }
    SimpleGraph::from_edges(2 * k as usize, &edges).expect("gadget edges are simple")
}

/// Observed sojourn times for one template.
#[derive(Debug, Clone)]
pub struct SojournSample {
    pub template: CommunityTemplate,
    pub taus: Vec<u32>,
}

impl SojournSample {
    pub fn mean(&self) -> f64 {
        self.taus.iter().map(|&t| t as f64).sum::<f64>() / self.taus.len() as f64
    }

    /// Standard error of the mean.
    pub fn stderr(&self) -> f64 {
        let n = self.taus.len() as f64;
        let mean = self.mean();
        let var = self
            .taus
            .iter()
            .map(|&t| (t as f64 - mean).powi(2))
            .sum::<f64>()
            / (n - 1.0);
        (var / n).sqrt()
    }

    /// Empirical probability of observing the value `tau`.
    pub fn pmf_at(&self, tau: u32) -> f64 {
        self.taus.iter().filter(|&&t| t == tau).count() as f64 / self.taus.len() as f64
    }
}

/// Draws `n_samples` sojourn times on the gadget. Each sample starts at the
/// state (arm of member 0, member 0), i.e. the walk has just entered, and
/// runs until it steps onto any arm node.
pub fn sample_sojourn<R: Rng + ?Sized>(
    template: &CommunityTemplate,
    params: &Node2vecParams,
    n_samples: usize,
    rng: &mut R,
) -> Result<SojournSample, WalkError> {
    if !params.strictly_positive() {
        return Err(WalkError::InvalidParams(
            "sojourn sampling needs alpha, beta, gamma > 0".into(),
        ));
    }
    let k = template.size();
    let gadget = community_gadget(template);
    let entry = WalkState::new(k, 0);
    let mut taus = Vec::with_capacity(n_samples);
    for _ in 0..n_samples {
        let mut walker = Walker::with_state(&gadget, *params, entry, rng);
        let mut tau = 1u32; // the entering jump
        loop {
            let (state, _) = walker.step()?;
            if state.cur >= k {
                break; // exit jump, not counted
            }
            tau += 1;
        }
        taus.push(tau);
    }
    Ok(SojournSample {
        template: template.clone(),
        taus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn gadget_shape() {
        let g = community_gadget(&CommunityTemplate::clique(3));
        assert_eq!(g.node_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(3), 1);
    }

    #[test]
    fn singleton_community_always_one() {
        let p = Node2vecParams::new(0.3, 1.0, 2.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let s = sample_sojourn(&CommunityTemplate::clique(1), &p, 500, &mut rng).unwrap();
        assert!(s.taus.iter().all(|&t| t == 1));
    }

    #[test]
    fn srw_triangle_mean_is_three() {
        let p = Node2vecParams::simple_random_walk();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let s = sample_sojourn(&CommunityTemplate::clique(3), &p, 1_000_000, &mut rng).unwrap();
        assert!(
            (s.mean() - 3.0).abs() <= 3.0 * s.stderr(),
            "mean {} stderr {}",
            s.mean(),
            s.stderr()
        );
    }

    #[test]
    fn immediate_exit_fraction_matches_entry_weights() {
        // P(tau = 1) = alpha / (alpha + (k-1) gamma).
        let p = Node2vecParams::new(2.0, 1.0, 0.5).unwrap();
        let k = 4u32;
        let expected = p.alpha / (p.alpha + (k - 1) as f64 * p.gamma);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let n = 200_000;
        let s = sample_sojourn(&CommunityTemplate::clique(k), &p, n, &mut rng).unwrap();
        let freq = s.pmf_at(1);
        let se = (expected * (1.0 - expected) / n as f64).sqrt();
        assert!(
            (freq - expected).abs() <= 3.0 * se,
            "freq {freq} expected {expected}"
        );
    }

    #[test]
    fn empirical_pmf_matches_the_clique_formulas() {
        let p = Node2vecParams::new(0.8, 1.7, 0.6).unwrap();
        let k = 4u32;
        let n = 300_000;
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let s = sample_sojourn(&CommunityTemplate::clique(k), &p, n, &mut rng).unwrap();
        for l in 1..=3u32 {
            let expected = crate::sojourn::sojourn_pmf_clique(k, &p, l).unwrap();
            let freq = s.pmf_at(l);
            let se = (expected * (1.0 - expected) / n as f64).sqrt();
            assert!(
                (freq - expected).abs() <= 3.0 * se,
                "l = {l}: freq {freq}, expected {expected}"
            );
        }
    }

    #[test]
    fn rejects_zero_parameters() {
        let p = Node2vecParams::new(0.0, 1.0, 1.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        assert!(sample_sojourn(&CommunityTemplate::clique(3), &p, 10, &mut rng).is_err());
    }
}
