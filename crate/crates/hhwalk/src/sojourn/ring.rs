//! Sojourn times in ring communities.
//!
//! In a ring community every node sits on a circle next to its four
//! nearest neighbors. Size six still behaves like a clique in one respect:
//! consecutive walk positions always share two triangles, so a single
//! geometric kernel applies and the expectation has a closed form. From
//! size seven on, a move to a distance-one neighbor (a short step) and a
//! move to a distance-two neighbor (a long step) leave the walk in
//! different local situations, and the remaining randomness is a two-state
//! chain over step types.

use crate::error::AnalyticsError;
use crate::sojourn::SojournExpectation;
use crate::walk::Node2vecParams;

/// Expected sojourn time in the size-six ring:
/// `(5 alpha + 8 beta + 12 gamma) / (alpha + 4 gamma)`.
pub fn expected_sojourn_ring6(p: &Node2vecParams) -> Result<SojournExpectation, AnalyticsError> {
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let denominator = a + 4.0 * g;
    if denominator <= 0.0 {
        return Err(AnalyticsError::DegenerateParams(format!(
            "alpha + 4 gamma = {denominator}"
        )));
    }
    SojournExpectation::new((5.0 * a + 8.0 * b + 12.0 * g) / denominator)
}

/// The step-type kernel of rings of size at least seven.
///
/// After a short step the normalizer is `alpha + 2 beta + 2 gamma`; after a
/// long step it is `alpha + beta + 3 gamma`. Each row of
/// `(q_ss, q_sl, p_s)` and `(q_ls, q_ll, p_l)` sums to one, as does the
/// entry row `(entry_exit, entry_short, entry_long)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RingKernel {
    /// Short step followed by another short step.
    pub q_ss: f64,
    /// Short step followed by a long step.
    pub q_sl: f64,
    /// Long step followed by a short step.
    pub q_ls: f64,
    /// Long step followed by another long step.
    pub q_ll: f64,
    /// Exit probability after a short step.
    pub p_s: f64,
    /// Exit probability after a long step.
    pub p_l: f64,
    /// Exit immediately after entering.
    pub entry_exit: f64,
    /// First internal move is short.
    pub entry_short: f64,
    /// First internal move is long.
    pub entry_long: f64,
}

pub fn ring_kernel(p: &Node2vecParams) -> Result<RingKernel, AnalyticsError> {
    let (a, b, g) = (p.alpha, p.beta, p.gamma);
    let norm_s = a + 2.0 * b + 2.0 * g;
    let norm_l = a + b + 3.0 * g;
    let norm_entry = a + 4.0 * g;
    if norm_s <= 0.0 || norm_l <= 0.0 || norm_entry <= 0.0 {
        return Err(AnalyticsError::DegenerateParams(
            "zero normalizer in the ring kernel".into(),
        ));
    }
    Ok(RingKernel {
        q_ss: (a + b) / norm_s,
        q_sl: (b + g) / norm_s,
        q_ls: (b + g) / norm_l,
        q_ll: (a + g) / norm_l,
        p_s: g / norm_s,
        p_l: g / norm_l,
        entry_exit: a / norm_entry,
        entry_short: 2.0 * g / norm_entry,
        entry_long: 2.0 * g / norm_entry,
    })
}

impl RingKernel {
    /// Spectral-radius bound of the internal kernel: the larger row sum.
    fn contraction(&self) -> f64 {
        (self.q_ss + self.q_sl).max(self.q_ls + self.q_ll)
    }
}

/// Expected sojourn time in a ring of size `k >= 7`, computed exactly.
///
/// With `m_s` and `m_l` the expected remaining jumps inside after a short
/// and a long step, the kernel gives the linear system
///
/// ```text
/// m_s = q_ss (1 + m_s) + q_sl (1 + m_l)
/// m_l = q_ls (1 + m_s) + q_ll (1 + m_l)
/// ```
///
/// and the expectation is `1 + entry_short (1 + m_s) + entry_long (1 + m_l)`.
/// The result does not depend on `k`: every node of a ring community has
/// the same local picture regardless of the ring's size.
pub fn expected_sojourn_ring(
    k: u32,
    p: &Node2vecParams,
) -> Result<SojournExpectation, AnalyticsError> {
    assert!(
        k >= 7,
        "rings below size 7 reduce to cliques or the size-6 closed form"
    );
    let kernel = ring_kernel(p)?;
    let (m_s, m_l) = solve_two_state(&kernel)?;
    SojournExpectation::new(
        1.0 + kernel.entry_short * (1.0 + m_s) + kernel.entry_long * (1.0 + m_l),
    )
}

fn solve_two_state(kernel: &RingKernel) -> Result<(f64, f64), AnalyticsError> {
    // (1 - q_ss) m_s - q_sl m_l = q_ss + q_sl
    // -q_ls m_s + (1 - q_ll) m_l = q_ls + q_ll
    let a11 = 1.0 - kernel.q_ss;
    let a12 = -kernel.q_sl;
    let a21 = -kernel.q_ls;
    let a22 = 1.0 - kernel.q_ll;
    let b1 = kernel.q_ss + kernel.q_sl;
    let b2 = kernel.q_ls + kernel.q_ll;
    let det = a11 * a22 - a12 * a21;
    if det.abs() < 1e-300 {
        return Err(AnalyticsError::SingularSystem);
    }
    Ok(((b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det))
}

/// Probability that the walk spends exactly `m` jumps in a ring community
/// of size `k >= 7`: the entry row times `m - 2` kernel applications times
/// the exit column, evaluated as iterated vector products.
pub fn sojourn_pmf_ring(k: u32, p: &Node2vecParams, m: u32) -> Result<f64, AnalyticsError> {
    assert!(
        k >= 7,
        "rings below size 7 reduce to cliques or the size-6 closed form"
    );
    assert!(m >= 1, "sojourn times start at 1");
    let kernel = ring_kernel(p)?;
    if m == 1 {
        return Ok(kernel.entry_exit);
    }
    let mut v = (kernel.entry_short, kernel.entry_long);
    for _ in 0..m - 2 {
        v = (
            v.0 * kernel.q_ss + v.1 * kernel.q_ls,
            v.0 * kernel.q_sl + v.1 * kernel.q_ll,
        );
    }
    Ok(v.0 * kernel.p_s + v.1 * kernel.p_l)
}

/// The expectation as a truncated series over the pmf, stopping once the
/// remaining tail can no longer move the result by `tail_tol`. Serves as an
/// independent route to [`expected_sojourn_ring`].
pub fn expected_sojourn_ring_series(
    p: &Node2vecParams,
    tail_tol: f64,
) -> Result<(f64, u32), AnalyticsError> {
    let kernel = ring_kernel(p)?;
    let rho = kernel.contraction();
    let mut sum = kernel.entry_exit;
    let mut v = (kernel.entry_short, kernel.entry_long);
    let mut m = 2u32;
    loop {
        sum += m as f64 * (v.0 * kernel.p_s + v.1 * kernel.p_l);
        // Remaining mass is at most the surviving probability; its
        // contribution to the mean is bounded through the contraction.
        let survive = (v.0 + v.1) * rho;
        let tail_bound = survive * (m as f64 + 1.0 + rho / (1.0 - rho));
        if tail_bound < tail_tol || m > 10_000_000 {
            return Ok((sum, m));
        }
        v = (
            v.0 * kernel.q_ss + v.1 * kernel.q_ls,
            v.0 * kernel.q_sl + v.1 * kernel.q_ll,
        );
        m += 1;
    }
}
