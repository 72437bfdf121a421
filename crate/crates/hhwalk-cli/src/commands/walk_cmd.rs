//! `hhwalk walk`: one long walk, occupancy dump, optional trajectory head.

use std::path::PathBuf;

use hhwalk::walk::{run_walk, run_walk_recording, write_trajectory_csv, Node2vecParams, WalkStart};
use serde::Serialize;

use crate::commands::{
    build_model, create_file, ensure_out_dir, rng_stream, streams, write_json, ModelMeta,
};
use crate::config::ExperimentConfig;
use crate::CliError;

#[derive(Debug, Serialize)]
pub struct WalkOutput {
    pub seed: u64,
    pub rng: &'static str,
    pub steps: u64,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub trajectory_rows: Option<usize>,
    pub model: ModelMeta,
    #[serde(skip)]
    pub occupancy_csv: PathBuf,
}

pub fn walk(
    config: &ExperimentConfig,
    trajectory_rows: Option<usize>,
) -> Result<WalkOutput, CliError> {
    let model = build_model(config)?;
    let dir = ensure_out_dir(config)?;
    let params: Node2vecParams = config.params.cells()?[0];

    let mut rng = rng_stream(config.seed, streams::WALK);
    let counts = run_walk(
        &model.household,
        &params,
        WalkStart::UniformEdge,
        config.walk_steps,
        &mut rng,
    )?;
    counts.write_csv(&model.household, create_file(&dir, "occupancy.csv")?)?;

    if let Some(rows) = trajectory_rows {
        // Replay the prefix on a fresh copy of the same stream; the walk is
        // deterministic, so this is the head of the walk above without
        // holding the whole trajectory in memory.
        let mut replay_rng = rng_stream(config.seed, streams::WALK);
        let prefix = (rows as u64).min(config.walk_steps);
        let (_, trajectory) = run_walk_recording(
            &model.household,
            &params,
            WalkStart::UniformEdge,
            prefix,
            &mut replay_rng,
        )?;
        write_trajectory_csv(&trajectory, rows, create_file(&dir, "trajectory.csv")?)?;
    }

    let output = WalkOutput {
        seed: config.seed,
        rng: "chacha8",
        steps: config.walk_steps,
        alpha: params.alpha,
        beta: params.beta,
        gamma: params.gamma,
        trajectory_rows,
        model: model.meta,
        occupancy_csv: dir.join("occupancy.csv"),
    };
    write_json(&dir, "walk_metadata.json", &output)?;
    Ok(output)
}
