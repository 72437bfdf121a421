//! Stationary distributions assembled from sojourn expectations.

use std::collections::HashMap;
use std::io::Write;

use crate::dist::StationaryDistribution;
use crate::error::AnalyticsError;
use crate::graph::{CommunityTemplate, HouseholdGraph, NodeId, SimpleGraph};
use crate::sojourn::{expected_sojourn, SojournExpectation};
use crate::walk::Node2vecParams;

/// The stationary probability of a node in a household model is its
/// community's expected sojourn time, normalized over all communities:
///
/// ```text
/// pi(v) = E[tau(type(v))] / sum over types H of |H| * count(H) * E[tau(H)]
/// ```
///
/// Needs strictly positive parameters and a triangle in the graph (which
/// makes the walk chain aperiodic); both are checked.
pub fn stationary_household(
    g: &HouseholdGraph,
    p: &Node2vecParams,
) -> Result<StationaryDistribution, AnalyticsError> {
    if !p.strictly_positive() {
        return Err(AnalyticsError::DegenerateParams(
            "stationary distributions need alpha, beta, gamma > 0".into(),
        ));
    }
    stationary_from_expectations(g, |template| expected_sojourn(template, p))
}

/// Same assembly with a caller-supplied expectation per template. Used for
/// limit-case evaluations where the expectations come from formulas outside
/// the strictly-positive regime.
pub fn stationary_from_expectations<F>(
    g: &HouseholdGraph,
    mut expectation_for: F,
) -> Result<StationaryDistribution, AnalyticsError>
where
    F: FnMut(&CommunityTemplate) -> Result<SojournExpectation, AnalyticsError>,
{
    if !g.graph().contains_triangle() {
        return Err(AnalyticsError::InvalidHousehold(
            "no triangle: the walk chain is not aperiodic".into(),
        ));
    }
    // One expectation per unique template.
    let mut expectations: HashMap<&CommunityTemplate, f64> = HashMap::new();
    for info in g.communities() {
        if !expectations.contains_key(&info.template) {
            let e = expectation_for(&info.template)?;
            expectations.insert(&info.template, e.value());
        }
    }
    let normalizer: f64 = g
        .communities()
        .iter()
        .map(|info| info.size() as f64 * expectations[&info.template])
        .sum();
    let values = (0..g.node_count() as NodeId)
        .map(|v| expectations[g.template_of_node(v)] / normalizer)
        .collect();
    Ok(StationaryDistribution::from_values(values))
}

/// Degree-proportional distribution of the simple random walk,
/// `pi(v) = d_v / 2|E|`.
pub fn stationary_srw(g: &SimpleGraph) -> StationaryDistribution {
    let twice_edges = g.directed_edge_count() as f64;
    StationaryDistribution::from_values(
        (0..g.node_count() as NodeId)
            .map(|v| g.degree(v) as f64 / twice_edges)
            .collect(),
    )
}

/// Limit regimes of the stationary probability on clique household models
/// with Poisson community sizes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PoissonLimitCase {
    /// Backtracking dominates; the walk behaves like the simple random walk.
    AlphaInf,
    /// Exploration dominates; the distribution is uniform.
    GammaInf,
    /// No backtracking, unit exploration weight; larger cliques are favored
    /// as `beta` grows.
    AlphaZeroGammaOne { beta: f64 },
}

/// Asymptotic stationary probability of a node in an `l`-clique when the
/// `n` community sizes follow Poisson(`lambda`).
pub fn poisson_limit_distribution(case: PoissonLimitCase, lambda: f64, n: usize, l: u32) -> f64 {
    let n = n as f64;
    let l = l as f64;
    match case {
        PoissonLimitCase::AlphaInf => l / (n * (lambda * lambda + lambda)),
        PoissonLimitCase::GammaInf => 1.0 / (n * lambda),
        PoissonLimitCase::AlphaZeroGammaOne { beta } => {
            ((l - 2.0) * beta + 2.0) / (lambda * n * (beta * (lambda - 1.0) + 2.0))
        }
    }
}

/// `node,degree,community_template,pi_analytic` rows; the same layout is
/// used for projected oracle distributions.
pub fn write_stationary_csv<W: Write>(
    g: &HouseholdGraph,
    dist: &StationaryDistribution,
    column: &str,
    mut w: W,
) -> std::io::Result<()> {
    writeln!(w, "node,degree,community_template,{column}")?;
    for v in 0..g.node_count() as NodeId {
        writeln!(
            w,
            "{v},{},{},{:.17e}",
            g.graph().degree(v),
            g.template_of_node(v).label(),
            dist.get(v)
        )?;
    }
    Ok(())
}

/// `alpha,beta,gamma,template,k,expected_tau` rows over a parameter grid.
pub fn write_expectation_sweep_csv<W: Write>(
    rows: &[(Node2vecParams, CommunityTemplate, f64)],
    mut w: W,
) -> std::io::Result<()> {
    writeln!(w, "alpha,beta,gamma,template,k,expected_tau")?;
    for (p, template, e) in rows {
        writeln!(
            w,
            "{},{},{},{},{},{:.17e}",
            p.alpha,
            p.beta,
            p.gamma,
            template.label(),
            template.size(),
            e
        )?;
    }
    Ok(())
}
