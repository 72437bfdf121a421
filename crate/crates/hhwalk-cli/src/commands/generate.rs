//! `hhwalk generate`: write the model files.

use std::path::PathBuf;

use hhwalk::graph::{write_community_map, write_edge_list};

use crate::commands::{build_model, create_file, ensure_out_dir, write_json, ModelMeta};
use crate::config::ExperimentConfig;
use crate::CliError;

#[derive(Debug)]
pub struct GenerateOutput {
    pub universe_edges: PathBuf,
    pub household_edges: PathBuf,
    pub communities: PathBuf,
    pub metadata: PathBuf,
    pub meta: ModelMeta,
}

pub fn generate(config: &ExperimentConfig) -> Result<GenerateOutput, CliError> {
    let model = build_model(config)?;
    let dir = ensure_out_dir(config)?;

    write_edge_list(
        model.household.universe().graph(),
        create_file(&dir, "universe_edges.txt")?,
    )?;
    write_edge_list(
        model.household.graph(),
        create_file(&dir, "household_edges.txt")?,
    )?;
    write_community_map(&model.household, create_file(&dir, "communities.txt")?)?;
    write_json(&dir, "metadata.json", &model.meta)?;

    Ok(GenerateOutput {
        universe_edges: dir.join("universe_edges.txt"),
        household_edges: dir.join("household_edges.txt"),
        communities: dir.join("communities.txt"),
        metadata: dir.join("metadata.json"),
        meta: model.meta,
    })
}
