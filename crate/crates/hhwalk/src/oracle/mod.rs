//! Exact ground truth: the walk chain on directed edges solved by linear
//! algebra, plus the asymmetric-triangle closed form.

mod asym_triangle;
mod chain;
mod solve;

pub use asym_triangle::{
    asym_triangle_closed_form, build_asym_triangle_graph, write_edge_distribution_csv,
    AsymTriangleGadget,
};
pub use chain::{build_edge_chain, project_edges_to_nodes, EdgeChain};
pub use solve::{solve_stationary, SolveMethod, MAX_DIRECT_SOLVE_STATES};
