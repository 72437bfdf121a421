//! Exact sojourn expectations on arbitrary community gadgets.
//!
//! Works for any template: build the community-plus-arms gadget, set up the
//! absorbing chain on its internal directed-edge states (arm-to-member
//! entries and member-to-member moves; member-to-arm moves absorb), and
//! solve the expected-absorption-time system. This is the slow exact route
//! the closed forms are checked against.

use nalgebra::{DMatrix, DVector};

use crate::error::AnalyticsError;
use crate::graph::CommunityTemplate;
use crate::sojourn::SojournExpectation;
use crate::walk::{community_gadget, Node2vecParams};

pub fn expected_sojourn_generic(
    template: &CommunityTemplate,
    p: &Node2vecParams,
) -> Result<SojournExpectation, AnalyticsError> {
    if !p.strictly_positive() {
        return Err(AnalyticsError::DegenerateParams(
            "the absorbing-chain solve needs alpha, beta, gamma > 0".into(),
        ));
    }
    let k = template.size();
    let gadget = community_gadget(template);

    // Internal states: directed edges whose target is a member.
    let mut state_of_edge = vec![usize::MAX; gadget.directed_edge_count()];
    let mut states = Vec::new();
    for (id, (_, target)) in gadget.directed_edges().enumerate() {
        if target < k {
            state_of_edge[id] = states.len();
            states.push(id);
        }
    }
    let n = states.len();

    // Expected jumps to absorption t solve (I - Q) t = 1, counting the
    // exit jump; the sojourn time counts the entry jump instead of the
    // exit jump, so it equals t at the entry state. Solved in row-scaled
    // form (D - W) t = D 1, where W holds the raw weights and D the row
    // totals: the off-diagonal entries are then exact, which keeps the
    // comparison against closed forms tight even for ill-scaled weights.
    // The diagonal is the row's weight total; its difference against the
    // internal off-diagonals is the tiny exit weight, and that implicit
    // cancellation amplifies any rounding of the total by total/exit. So
    // the total is carried as an exact hi/lo pair: the matrix holds the
    // hi part and refinement residuals see the lo part, making the
    // iteration converge to the exact weight-sum system.
    let mut system = DMatrix::<f64>::zeros(n, n);
    let mut rhs = DVector::<f64>::zeros(n);
    let mut total_lo = vec![0.0_f64; n];
    for (row, &edge_id) in states.iter().enumerate() {
        let (prev, cur) = gadget.directed_edge_at(edge_id);
        let (mut backtracks, mut triangles, mut others) = (0u32, 0u32, 0u32);
        for &w in gadget.neighbors(cur) {
            let weight = if w == prev {
                backtracks += 1;
                p.alpha
            } else if gadget.has_edge(prev, w) {
                triangles += 1;
                p.beta
            } else {
                others += 1;
                p.gamma
            };
            if w < k {
                let target_edge = gadget.directed_edge_id(cur, w).expect("gadget edge");
                system[(row, state_of_edge[target_edge])] = -weight;
            }
        }
        let (hi, lo) = weight_total(
            (backtracks, p.alpha),
            (triangles, p.beta),
            (others, p.gamma),
        );
        debug_assert!(hi > 0.0);
        system[(row, row)] += hi;
        rhs[row] = hi;
        total_lo[row] = lo;
    }

    let lu = system.clone().lu();
    let mut solution = lu.solve(&rhs).ok_or(AnalyticsError::SingularSystem)?;
    // Iterative refinement with a compensated residual against the exact
    // system (hi + lo on diagonal and right-hand side).
    for _ in 0..2 {
        let mut residual = compensated_residual(&system, &solution, &rhs);
        for i in 0..n {
            residual[i] += total_lo[i] * (1.0 - solution[i]);
        }
        match lu.solve(&residual) {
            Some(correction) => solution += correction,
            None => break,
        }
    }

    let entry_edge = gadget.directed_edge_id(k, 0).expect("entry arm edge");
    SojournExpectation::new(solution[state_of_edge[entry_edge]])
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let a_part = s - b;
    let b_part = s - a_part;
    (s, (a - a_part) + (b - b_part))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Exact hi/lo representation of `n_a * a + n_b * b + n_c * c`.
fn weight_total(a: (u32, f64), b: (u32, f64), c: (u32, f64)) -> (f64, f64) {
    let (p1, e1) = two_prod(a.0 as f64, a.1);
    let (p2, e2) = two_prod(b.0 as f64, b.1);
    let (p3, e3) = two_prod(c.0 as f64, c.1);
    let (s12, e12) = two_sum(p1, p2);
    let (s, e123) = two_sum(s12, p3);
    let lo = e1 + e2 + e3 + e12 + e123;
    let hi = s + lo;
    (hi, lo - (hi - s))
}

/// `b - A x` with error-free products (FMA) and Neumaier accumulation, so
/// the refinement step sees the true residual rather than rounding noise.
fn compensated_residual(a: &DMatrix<f64>, x: &DVector<f64>, b: &DVector<f64>) -> DVector<f64> {
    let n = x.len();
    DVector::from_fn(n, |i, _| {
        let mut sum = b[i];
        let mut compensation = 0.0;
        let add = |value: f64, sum: &mut f64, compensation: &mut f64| {
            let t = *sum + value;
            *compensation += if sum.abs() >= value.abs() {
                (*sum - t) + value
            } else {
                (value - t) + *sum
            };
            *sum = t;
        };
        for j in 0..n {
            let coefficient = -a[(i, j)];
            if coefficient == 0.0 {
                continue;
            }
            let hi = coefficient * x[j];
            let lo = coefficient.mul_add(x[j], -hi);
            add(hi, &mut sum, &mut compensation);
            add(lo, &mut sum, &mut compensation);
        }
        sum + compensation
    })
}
