//! `hhwalk oracle`: solve the directed-edge chain and dump both the edge
//! distribution and its node projection.

use std::path::PathBuf;

use hhwalk::oracle::{
    build_edge_chain, project_edges_to_nodes, solve_stationary, write_edge_distribution_csv,
};
use hhwalk::sojourn::write_stationary_csv;
use serde::Serialize;

use crate::commands::{build_model, create_file, ensure_out_dir, write_json, ModelMeta};
use crate::config::ExperimentConfig;
use crate::CliError;

#[derive(Debug, Serialize)]
pub struct OracleOutput {
    pub seed: u64,
    pub rng: &'static str,
    pub method: String,
    pub tol: f64,
    pub states: usize,
    pub balance_residual: f64,
    pub model: ModelMeta,
    #[serde(skip)]
    pub edge_csv: PathBuf,
    #[serde(skip)]
    pub node_csv: PathBuf,
}

pub fn oracle(config: &ExperimentConfig) -> Result<OracleOutput, CliError> {
    let model = build_model(config)?;
    let dir = ensure_out_dir(config)?;
    let params = config.params.cells()?[0];

    let chain = build_edge_chain(model.household.graph(), &params)?;
    let pi = solve_stationary(
        &chain,
        config.oracle.method.to_solve_method(),
        config.oracle.tol,
    )?;
    let residual = chain.balance_residual(&pi);
    let nodes = project_edges_to_nodes(&pi, &chain);

    write_edge_distribution_csv(
        model.household.graph(),
        &pi,
        create_file(&dir, "edge_stationary.csv")?,
    )?;
    write_stationary_csv(
        &model.household,
        &nodes,
        "pi_oracle",
        create_file(&dir, "stationary_oracle.csv")?,
    )?;

    let output = OracleOutput {
        seed: config.seed,
        rng: "chacha8",
        method: format!("{:?}", config.oracle.method),
        tol: config.oracle.tol,
        states: chain.num_states(),
        balance_residual: residual,
        model: model.meta,
        edge_csv: dir.join("edge_stationary.csv"),
        node_csv: dir.join("stationary_oracle.csv"),
    };
    write_json(&dir, "oracle_metadata.json", &output)?;
    Ok(output)
}
