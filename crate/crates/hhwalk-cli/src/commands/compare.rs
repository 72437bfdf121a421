//! `hhwalk compare`: all four stationary routes side by side.

use std::io::Write;
use std::path::PathBuf;

use hhwalk::graph::NodeId;
use hhwalk::oracle::{build_edge_chain, project_edges_to_nodes, solve_stationary};
use hhwalk::sojourn::{stationary_household, stationary_srw};
use hhwalk::walk::{empirical_node_distribution, run_walk, Node2vecParams, WalkStart};
use hhwalk::StationaryDistribution;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::{
    build_model, create_file, ensure_out_dir, param_tag, rng_stream, streams, write_json, ModelMeta,
};
use crate::config::ExperimentConfig;
use crate::CliError;

/// Analytic and oracle are both exact; they must agree to this tolerance
/// or the run fails with exit code 2.
pub const COMPARE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Serialize)]
pub struct CellSummary {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub csv: String,
    pub max_abs_diff_analytic_oracle: f64,
    pub tv_empirical_oracle: f64,
    pub walk_steps: u64,
}

#[derive(Debug, Serialize)]
pub struct CompareOutput {
    pub seed: u64,
    pub rng: &'static str,
    pub model: ModelMeta,
    pub cells: Vec<CellSummary>,
    #[serde(skip)]
    pub summary_path: PathBuf,
}

fn column_sums_ok(columns: &[&StationaryDistribution]) -> bool {
    columns.iter().all(|d| (d.sum() - 1.0).abs() < 1e-9)
}

pub fn compare(config: &ExperimentConfig) -> Result<CompareOutput, CliError> {
    let model = build_model(config)?;
    let dir = ensure_out_dir(config)?;
    let hh = &model.household;
    let srw = stationary_srw(hh.graph());
    let method = config.oracle.method.to_solve_method();

    // Cells run in parallel on derived RNG streams, each writing its own
    // CSV; the summary below is the single-threaded finalizer.
    let cells: Result<Vec<CellSummary>, CliError> = config
        .params
        .cells()?
        .par_iter()
        .enumerate()
        .map(|(index, params)| {
            let analytic = stationary_household(hh, params)?;
            let chain = build_edge_chain(hh.graph(), params)?;
            let oracle = project_edges_to_nodes(
                &solve_stationary(&chain, method, config.oracle.tol)?,
                &chain,
            );
            let mut rng = rng_stream(config.seed, streams::GRID_BASE + index as u64);
            let counts = run_walk(
                hh,
                params,
                WalkStart::UniformEdge,
                config.walk_steps,
                &mut rng,
            )?;
            let empirical = empirical_node_distribution(&counts);

            debug_assert!(column_sums_ok(&[&analytic, &oracle, &empirical, &srw]));

            let csv_name = format!("compare_{}.csv", param_tag(params));
            write_cell_csv(
                hh, params, &analytic, &oracle, &empirical, &srw, &dir, &csv_name,
            )?;

            Ok(CellSummary {
                alpha: params.alpha,
                beta: params.beta,
                gamma: params.gamma,
                csv: csv_name,
                max_abs_diff_analytic_oracle: analytic.max_abs_diff(&oracle),
                tv_empirical_oracle: empirical.total_variation(&oracle),
                walk_steps: config.walk_steps,
            })
        })
        .collect();
    let cells = cells?;

    let output = CompareOutput {
        seed: config.seed,
        rng: "chacha8",
        model: model.meta,
        cells,
        summary_path: dir.join("compare_summary.json"),
    };
    write_json(&dir, "compare_summary.json", &output)?;

    let worst = output
        .cells
        .iter()
        .map(|c| c.max_abs_diff_analytic_oracle)
        .fold(0.0_f64, f64::max);
    if worst > COMPARE_TOL {
        return Err(CliError::Tolerance(format!(
            "analytic vs oracle max abs diff {worst:.3e} exceeds {COMPARE_TOL:.0e}"
        )));
    }
    Ok(output)
}

#[allow(clippy::too_many_arguments)]
fn write_cell_csv(
    hh: &hhwalk::HouseholdGraph,
    params: &Node2vecParams,
    analytic: &StationaryDistribution,
    oracle: &StationaryDistribution,
    empirical: &StationaryDistribution,
    srw: &StationaryDistribution,
    dir: &std::path::Path,
    name: &str,
) -> Result<(), CliError> {
    let mut w = create_file(dir, name)?;
    writeln!(
        w,
        "# alpha={} beta={} gamma={}",
        params.alpha, params.beta, params.gamma
    )?;
    writeln!(
        w,
        "node,degree,template,pi_analytic,pi_oracle,pi_empirical,pi_srw"
    )?;
    for v in 0..hh.node_count() as NodeId {
        writeln!(
            w,
            "{v},{},{},{:.17e},{:.17e},{:.17e},{:.17e}",
            hh.graph().degree(v),
            hh.template_of_node(v).label(),
            analytic.get(v),
            oracle.get(v),
            empirical.get(v),
            srw.get(v),
        )?;
    }
    Ok(())
}
