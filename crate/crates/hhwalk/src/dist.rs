//! Probability vectors over nodes and over directed edges.

/// Tolerance on the normalization invariant of a stored distribution.
pub const NORMALIZATION_TOL: f64 = 1e-12;

fn check_normalized(values: &[f64], what: &str) {
    debug_assert!(
        values.iter().all(|&p| p >= -NORMALIZATION_TOL),
        "{what}: negative probability"
    );
    let sum: f64 = values.iter().sum();
    debug_assert!(
        (sum - 1.0).abs() <= 1e-9,
        "{what}: probabilities sum to {sum}, not 1"
    );
}

fn normalize_in_place(values: &mut [f64]) {
    for p in values.iter_mut() {
        if *p < 0.0 && *p >= -NORMALIZATION_TOL {
            *p = 0.0;
        }
    }
    let sum: f64 = values.iter().sum();
    assert!(sum > 0.0, "cannot normalize an all-zero vector");
    for p in values.iter_mut() {
        *p /= sum;
    }
}

/// A probability distribution indexed by node id (household nodes, or
/// universe nodes, depending on context). All entries of one community are
/// equal for analytic household distributions.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    values: Vec<f64>,
}

impl StationaryDistribution {
    /// Wraps a vector that already sums to one.
    pub fn from_values(values: Vec<f64>) -> Self {
        check_normalized(&values, "node distribution");
        Self { values }
    }

    /// Normalizes a vector of non-negative masses.
    pub fn from_unnormalized(mut values: Vec<f64>) -> Self {
        normalize_in_place(&mut values);
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, node: u32) -> f64 {
        self.values[node as usize]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Total variation distance, half the L1 distance.
    pub fn total_variation(&self, other: &Self) -> f64 {
        assert_eq!(self.len(), other.len(), "distribution length mismatch");
        0.5 * self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.len(), other.len(), "distribution length mismatch");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

/// A probability distribution indexed by directed edge id.
///
/// The id order is the one defined by [`crate::graph::SimpleGraph`]:
/// directed edges grouped by source node, targets ascending. Chains built
/// from the same graph share the same order, so edge distributions from
/// different routes are directly comparable.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeStationaryDistribution {
    values: Vec<f64>,
}

impl EdgeStationaryDistribution {
    pub fn from_values(values: Vec<f64>) -> Self {
        check_normalized(&values, "edge distribution");
        Self { values }
    }

    pub fn from_unnormalized(mut values: Vec<f64>) -> Self {
        normalize_in_place(&mut values);
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, edge_id: usize) -> f64 {
        self.values[edge_id]
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    pub fn total_variation(&self, other: &Self) -> f64 {
        assert_eq!(self.len(), other.len(), "distribution length mismatch");
        0.5 * self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.len(), other.len(), "distribution length mismatch");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_masses() {
        let d = StationaryDistribution::from_unnormalized(vec![1.0, 3.0]);
        assert_eq!(d.values(), &[0.25, 0.75]);
        assert!((d.sum() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn total_variation_of_disjoint_is_one() {
        let a = StationaryDistribution::from_values(vec![1.0, 0.0]);
        let b = StationaryDistribution::from_values(vec![0.0, 1.0]);
        assert!((a.total_variation(&b) - 1.0).abs() < 1e-15);
        assert!((a.max_abs_diff(&b) - 1.0).abs() < 1e-15);
    }

    #[test]
    #[should_panic]
    fn rejects_all_zero() {
        let _ = StationaryDistribution::from_unnormalized(vec![0.0, 0.0]);
    }
}
