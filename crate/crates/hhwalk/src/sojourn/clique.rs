//! Closed forms for the time spent in clique communities.

use crate::error::AnalyticsError;
use crate::sojourn::SojournExpectation;
use crate::walk::Node2vecParams;

/// Expected sojourn time in a k-clique community:
///
/// ```text
/// E[tau] = (alpha + (k-1)(alpha + (k-2) beta + 2 gamma)) / (alpha + (k-1) gamma)
/// ```
///
/// Exact for every `k >= 1`; the denominator must be positive.
pub fn expected_sojourn_clique(
    k: u32,
    p: &Node2vecParams,
) -> Result<SojournExpectation, AnalyticsError> {
    assert!(k >= 1, "clique size must be positive");
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let km1 = (k - 1) as f64;
    let km2 = k.saturating_sub(2) as f64;
    let denominator = a + km1 * g;
    if denominator <= 0.0 {
        return Err(AnalyticsError::DegenerateParams(format!(
            "alpha + (k-1) gamma = {denominator} for k = {k}"
        )));
    }
    let numerator = a + km1 * (a + km2 * b + 2.0 * g);
    SojournExpectation::new(numerator / denominator)
}

/// Probability that the walk spends exactly `l` jumps in a k-clique
/// community, `k >= 2`. The first jump enters; staying probabilities decay
/// geometrically with ratio `q = (alpha + (k-2) beta) / (alpha + (k-2) beta + gamma)`.
pub fn sojourn_pmf_clique(k: u32, p: &Node2vecParams, l: u32) -> Result<f64, AnalyticsError> {
    assert!(k >= 2, "pmf is defined for k >= 2");
    assert!(l >= 1, "sojourn times start at 1");
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let km1 = (k - 1) as f64;
    let km2 = (k - 2) as f64;
    let entry_norm = a + km1 * g;
    let internal_norm = a + km2 * b + g;
    if entry_norm <= 0.0 || internal_norm <= 0.0 {
        return Err(AnalyticsError::DegenerateParams(
            "zero normalizer in the clique kernel".into(),
        ));
    }
    if l == 1 {
        return Ok(a / entry_norm);
    }
    let stay_in = km1 * g / entry_norm;
    let q = (a + km2 * b) / internal_norm;
    let exit = g / internal_norm;
    Ok(stay_in * q.powi(l as i32 - 2) * exit)
}
