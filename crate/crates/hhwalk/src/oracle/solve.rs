//! Stationary solvers for the directed-edge chain.

use nalgebra::{DMatrix, DVector};

use crate::dist::EdgeStationaryDistribution;
use crate::error::OracleError;
use crate::oracle::chain::EdgeChain;

/// Dense direct solves above this state count are refused; use power
/// iteration there.
pub const MAX_DIRECT_SOLVE_STATES: usize = 5000;

const MAX_POWER_ITERATIONS: u64 = 1_000_000;

/// How to solve `pi = pi P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    /// Iterate `pi <- pi P` from uniform until the L1 residual drops below
    /// the tolerance. Damping kicks in only if the residual stalls, which
    /// guards against near-periodic structure.
    PowerIteration,
    /// Replace one balance equation by the normalization row and solve the
    /// dense linear system. Exact up to rounding; sizes are capped.
    DirectSolve,
}

/// Solves for the stationary distribution over directed edges. The returned
/// vector satisfies `|pi P - pi|_1 <= tol` (power iteration) or is the
/// solution of the balance system (direct solve).
pub fn solve_stationary(
    chain: &EdgeChain,
    method: SolveMethod,
    tol: f64,
) -> Result<EdgeStationaryDistribution, OracleError> {
    match method {
        SolveMethod::PowerIteration => power_iteration(chain, tol),
        SolveMethod::DirectSolve => direct_solve(chain),
    }
}

fn power_iteration(chain: &EdgeChain, tol: f64) -> Result<EdgeStationaryDistribution, OracleError> {
    let n = chain.num_states();
    let mut pi = vec![1.0 / n as f64; n];
    let mut next = vec![0.0; n];
    let mut damped = false;
    let mut previous_residual = f64::INFINITY;
    let mut iterations = 0u64;
    loop {
        chain.apply(&pi, &mut next);
        // Residual of the undamped update; stochastic application only
        // shrinks it, so the returned iterate meets the tolerance too.
        let residual: f64 = next.iter().zip(&pi).map(|(a, b)| (a - b).abs()).sum();
        if damped {
            for (b, a) in next.iter_mut().zip(&pi) {
                *b = 0.5 * (*b + *a);
            }
        }
        std::mem::swap(&mut pi, &mut next);
        iterations += 1;
        if residual <= tol {
            return Ok(EdgeStationaryDistribution::from_unnormalized(pi));
        }
        if iterations >= MAX_POWER_ITERATIONS {
            return Err(OracleError::NotConverged {
                iterations,
                residual,
            });
        }
        // Oscillation check every 16 rounds: a residual that stopped
        // shrinking on an aperiodic chain means period-two bouncing.
        if iterations % 16 == 0 {
            if !damped && residual > 0.9 * previous_residual {
                damped = true;
            }
            previous_residual = residual;
        }
    }
}

fn direct_solve(chain: &EdgeChain) -> Result<EdgeStationaryDistribution, OracleError> {
    let n = chain.num_states();
    if n > MAX_DIRECT_SOLVE_STATES {
        return Err(OracleError::TooLargeForDirectSolve {
            states: n,
            max: MAX_DIRECT_SOLVE_STATES,
        });
    }
    // Balance equations (P^T - I) pi = 0 for all states but the last,
    // which is replaced by sum(pi) = 1.
    let mut system = DMatrix::<f64>::zeros(n, n);
    for state in 0..n {
        if state < n - 1 {
            system[(state, state)] = -1.0;
        }
    }
    for state in 0..n {
        for &(target, p) in chain.row(state) {
            let row = target as usize;
            if row < n - 1 {
                system[(row, state)] += p;
            }
        }
    }
    for col in 0..n {
        system[(n - 1, col)] = 1.0;
    }
    let mut rhs = DVector::<f64>::zeros(n);
    rhs[n - 1] = 1.0;
    let solution = system.lu().solve(&rhs).ok_or(OracleError::SingularSystem)?;
    Ok(EdgeStationaryDistribution::from_unnormalized(
        solution.iter().copied().collect(),
    ))
}
