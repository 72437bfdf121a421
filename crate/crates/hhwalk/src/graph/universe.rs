//! Universe graphs and their random generation.

use rand::Rng;
use rand_distr::{Distribution, Poisson};

use crate::error::GraphError;
use crate::graph::simple::{NodeId, SimpleGraph};

/// Per-draw cap on the rejection loops in degree sampling. Exhausting it
/// signals a pathological lambda rather than bad luck.
const POISSON_RETRY_CAP: u64 = 10_000_000;

/// Default cap on configuration-model resampling. Dense degree sequences
/// reject most pairings (for Poisson(4) degrees only about one pairing in
/// four hundred is simple and connected), so the cap leaves two orders of
/// magnitude of headroom.
pub const DEFAULT_CONFIG_MODEL_RETRIES: u64 = 10_000;

/// A degree sequence with even sum and strictly positive entries, the raw
/// material of the configuration model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence {
    values: Vec<u32>,
}

impl DegreeSequence {
    pub fn new(values: Vec<u32>) -> Result<Self, GraphError> {
        if values.is_empty() {
            return Err(GraphError::InvalidDegreeSequence("empty sequence".into()));
        }
        if values.contains(&0) {
            return Err(GraphError::InvalidDegreeSequence(
                "degrees must be at least 1".into(),
            ));
        }
        let sum: u64 = values.iter().map(|&d| d as u64).sum();
        if sum % 2 != 0 {
            return Err(GraphError::InvalidDegreeSequence(format!(
                "degree sum {sum} is odd"
            )));
        }
        Ok(Self { values })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> u64 {
        self.values.iter().map(|&d| d as u64).sum()
    }

    pub fn max(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

/// Draws `n` degrees i.i.d. Poisson(`lambda`) conditioned on being at least
/// one (zeros are resampled). If the sum comes out odd, the last entry is
/// resampled until parity holds, a minimal perturbation of the law.
pub fn sample_poisson_degrees<R: Rng + ?Sized>(
    n: usize,
    lambda: f64,
    rng: &mut R,
) -> Result<DegreeSequence, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidDegreeSequence(
            "need at least two nodes".into(),
        ));
    }
    if lambda <= 0.0 || lambda.is_nan() {
        return Err(GraphError::InvalidDegreeSequence(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    let poisson =
        Poisson::new(lambda).map_err(|e| GraphError::InvalidDegreeSequence(e.to_string()))?;
    let draw_positive = |rng: &mut R| -> Result<u32, GraphError> {
        for _ in 0..POISSON_RETRY_CAP {
            let x = poisson.sample(rng);
            if x >= 1.0 {
                return Ok(x as u32);
            }
        }
        Err(GraphError::RetriesExhausted {
            attempts: POISSON_RETRY_CAP,
        })
    };

    let mut values = Vec::with_capacity(n);
    for _ in 0..n {
        values.push(draw_positive(rng)?);
    }
    let mut attempts = 0u64;
    while values.iter().map(|&d| d as u64).sum::<u64>() % 2 != 0 {
        attempts += 1;
        if attempts > POISSON_RETRY_CAP {
            return Err(GraphError::RetriesExhausted { attempts });
        }
        *values.last_mut().expect("n >= 2") = draw_positive(rng)?;
    }
    DegreeSequence::new(values)
}

/// The graph whose nodes become communities of a household model. Hard
/// invariants (simple, connected) are enforced at construction; whether a
/// degree reaches three, which is what guarantees a triangle after
/// expansion, is left to [`has_degree_three_node`](Self::has_degree_three_node)
/// and household validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniverseGraph {
    graph: SimpleGraph,
}

impl UniverseGraph {
    pub fn new(graph: SimpleGraph) -> Result<Self, GraphError> {
        if !graph.is_connected() {
            return Err(GraphError::NotConnected);
        }
        Ok(Self { graph })
    }

    pub fn from_edges(node_count: usize, edges: &[(NodeId, NodeId)]) -> Result<Self, GraphError> {
        Self::new(SimpleGraph::from_edges(node_count, edges)?)
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn node_count(&self) -> usize {
        self.graph.node_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn degree(&self, v: NodeId) -> u32 {
        self.graph.degree(v) as u32
    }

    /// True if the household expansion will contain a triangle, which makes
    /// the walk chain aperiodic.
    pub fn has_degree_three_node(&self) -> bool {
        (0..self.node_count() as NodeId).any(|v| self.degree(v) >= 3)
    }
}

/// Samples a uniform stub pairing of the degree sequence and resamples from
/// scratch until the result is simple and connected. Rejection keeps the
/// degree sequence exact, which is what pins community sizes downstream.
pub fn sample_universe_configuration_model<R: Rng + ?Sized>(
    degrees: &DegreeSequence,
    rng: &mut R,
    max_retries: u64,
) -> Result<UniverseGraph, GraphError> {
    if degrees.len() < 2 {
        return Err(GraphError::InvalidDegreeSequence(
            "need at least two nodes".into(),
        ));
    }
    let mut stubs: Vec<NodeId> = Vec::with_capacity(degrees.sum() as usize);
    for (node, &d) in degrees.values().iter().enumerate() {
        stubs.extend(std::iter::repeat(node as NodeId).take(d as usize));
    }

    for _ in 0..max_retries {
        // Fisher-Yates shuffle, then pair consecutive stubs: a uniform
        // perfect matching of the stub set.
        for i in (1..stubs.len()).rev() {
            let j = rng.random_range(0..=i);
            stubs.swap(i, j);
        }
        let edges: Vec<(NodeId, NodeId)> = stubs.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        let Ok(graph) = SimpleGraph::from_edges(degrees.len(), &edges) else {
            continue; // self-loop or multi-edge
        };
        if !graph.is_connected() {
            continue;
        }
        return UniverseGraph::new(graph);
    }
    Err(GraphError::RetriesExhausted {
        attempts: max_retries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn degree_sequence_rejects_odd_sum_and_zeros() {
        assert!(matches!(
            DegreeSequence::new(vec![1, 2]),
            Err(GraphError::InvalidDegreeSequence(_))
        ));
        assert!(matches!(
            DegreeSequence::new(vec![0, 2]),
            Err(GraphError::InvalidDegreeSequence(_))
        ));
        assert!(DegreeSequence::new(vec![3, 3, 3, 3]).is_ok());
    }

    #[test]
    fn poisson_degrees_are_deterministic_per_seed() {
        let a = sample_poisson_degrees(100, 4.0, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = sample_poisson_degrees(100, 4.0, &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.sum() % 2, 0);
    }

    #[test]
    fn poisson_mean_tracks_lambda() {
        // Law of large numbers across seeds: the mean of a Poisson(4)
        // conditioned on >= 1 sits near 4.07, and 100 samples put the
        // per-seed mean well inside a 0.8 band around 4.
        for seed in 0..50 {
            let d = sample_poisson_degrees(100, 4.0, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
            let mean = d.sum() as f64 / d.len() as f64;
            assert!((mean - 4.0).abs() < 0.8, "seed {seed}: mean {mean}");
        }
    }

    #[test]
    fn tiny_lambda_conditions_to_ones() {
        let d = sample_poisson_degrees(2, 0.0001, &mut ChaCha8Rng::seed_from_u64(0)).unwrap();
        assert_eq!(d.values(), &[1, 1]);
    }

    #[test]
    fn cubic_four_node_sequence_gives_k4() {
        let degrees = DegreeSequence::new(vec![3, 3, 3, 3]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = sample_universe_configuration_model(&degrees, &mut rng, 1000).unwrap();
        assert_eq!(g.node_count(), 4);
        assert!((0..4).all(|v| g.degree(v) == 3));
        assert_eq!(g.edge_count(), 6); // K4 is the only simple option
    }

    #[test]
    fn all_twos_give_the_triangle() {
        let degrees = DegreeSequence::new(vec![2, 2, 2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let g = sample_universe_configuration_model(&degrees, &mut rng, 1000).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.graph().contains_triangle());
    }

    #[test]
    fn matching_degrees_cannot_connect() {
        // Two disjoint edges are the only loop-free pairings of (1,1,1,1).
        let degrees = DegreeSequence::new(vec![1, 1, 1, 1]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let r = sample_universe_configuration_model(&degrees, &mut rng, 50);
        assert!(matches!(r, Err(GraphError::RetriesExhausted { .. })));
    }

    #[test]
    fn configuration_model_is_deterministic() {
        let degrees = sample_poisson_degrees(40, 4.0, &mut ChaCha8Rng::seed_from_u64(3)).unwrap();
        let a =
            sample_universe_configuration_model(&degrees, &mut ChaCha8Rng::seed_from_u64(9), 1000)
                .unwrap();
        let b =
            sample_universe_configuration_model(&degrees, &mut ChaCha8Rng::seed_from_u64(9), 1000)
                .unwrap();
        assert_eq!(a, b);
    }
}
