//! Expected community sojourn times and the stationary distribution they
//! induce.
//!
//! Cliques and size-six rings have closed forms; larger rings reduce to a
//! two-state linear solve; everything else goes through the generic
//! absorbing-chain solver, which also serves as the cross-check for the
//! closed forms.

mod clique;
mod generic;
mod ring;
mod stationary;

pub use clique::{expected_sojourn_clique, sojourn_pmf_clique};
pub use generic::expected_sojourn_generic;
pub use ring::{
    expected_sojourn_ring, expected_sojourn_ring6, expected_sojourn_ring_series, ring_kernel,
    sojourn_pmf_ring, RingKernel,
};
pub use stationary::{
    poisson_limit_distribution, stationary_from_expectations, stationary_household, stationary_srw,
    write_expectation_sweep_csv, write_stationary_csv, PoissonLimitCase,
};

use crate::error::AnalyticsError;
use crate::graph::CommunityTemplate;
use crate::walk::Node2vecParams;

/// Expected number of jumps a walk spends inside one community visit,
/// counting the entering jump. At least one, finite for positive
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SojournExpectation {
    value: f64,
}

impl SojournExpectation {
    pub(crate) fn new(value: f64) -> Result<Self, AnalyticsError> {
        if !value.is_finite() || value < 1.0 - 1e-9 {
            return Err(AnalyticsError::DegenerateParams(format!(
                "expected sojourn time {value} is not a finite value >= 1"
            )));
        }
        Ok(Self { value })
    }

    pub fn value(&self) -> f64 {
        self.value
    }
}

/// Expected sojourn time of a template, closed forms preferred: cliques and
/// size-six rings evaluate the explicit formulas, larger rings solve the
/// two-state system, custom templates go through the absorbing-chain
/// solver.
///
/// A size-one community holds the walk for exactly one jump whatever the
/// weights are, so that case short-circuits; this keeps limit evaluations
/// at `alpha = 0` well defined, where the clique formula becomes 0/0.
pub fn expected_sojourn(
    template: &CommunityTemplate,
    p: &Node2vecParams,
) -> Result<SojournExpectation, AnalyticsError> {
    if template.size() == 1 {
        return SojournExpectation::new(1.0);
    }
    match template {
        CommunityTemplate::Clique(k) => expected_sojourn_clique(*k, p),
        CommunityTemplate::Ring(6) => expected_sojourn_ring6(p),
        CommunityTemplate::Ring(k) => expected_sojourn_ring(*k, p),
        CommunityTemplate::Custom(_) => expected_sojourn_generic(template, p),
    }
}
