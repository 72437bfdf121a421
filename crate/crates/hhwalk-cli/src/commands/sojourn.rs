//! `hhwalk sojourn`: expected sojourn times along three routes per
//! parameter cell and template.

use std::io::Write;
use std::path::PathBuf;

use hhwalk::sojourn::{expected_sojourn, expected_sojourn_generic, write_expectation_sweep_csv};
use hhwalk::walk::sample_sojourn;
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::{create_file, ensure_out_dir, rng_stream, streams, write_json};
use crate::config::ExperimentConfig;
use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct SojournRow {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub template: String,
    pub k: u32,
    pub e_closed_form: f64,
    pub e_generic: f64,
    pub e_montecarlo: f64,
    pub mc_stderr: f64,
}

#[derive(Debug, Serialize)]
pub struct SojournOutput {
    pub seed: u64,
    pub rng: &'static str,
    pub mc_samples: usize,
    pub rows: Vec<SojournRow>,
    #[serde(skip)]
    pub csv_path: PathBuf,
}

pub fn sojourn(config: &ExperimentConfig) -> Result<SojournOutput, CliError> {
    let dir = ensure_out_dir(config)?;
    let cells = config.params.cells()?;
    let templates: Vec<_> = config
        .sojourn
        .templates
        .iter()
        .map(|t| t.to_template())
        .collect();

    let jobs: Vec<(
        usize,
        hhwalk::walk::Node2vecParams,
        hhwalk::CommunityTemplate,
    )> = cells
        .iter()
        .flat_map(|p| templates.iter().map(move |t| (*p, t.clone())))
        .enumerate()
        .map(|(i, (p, t))| (i, p, t))
        .collect();

    let rows: Result<Vec<SojournRow>, CliError> = jobs
        .par_iter()
        .map(|(index, params, template)| {
            let closed = expected_sojourn(template, params)?;
            let generic = expected_sojourn_generic(template, params)?;
            let mut rng = rng_stream(config.seed, streams::SOJOURN_BASE + *index as u64);
            let sample = sample_sojourn(template, params, config.sojourn.mc_samples, &mut rng)?;
            Ok(SojournRow {
                alpha: params.alpha,
                beta: params.beta,
                gamma: params.gamma,
                template: template.label(),
                k: template.size(),
                e_closed_form: closed.value(),
                e_generic: generic.value(),
                e_montecarlo: sample.mean(),
                mc_stderr: sample.stderr(),
            })
        })
        .collect();
    let rows = rows?;

    let mut w = create_file(&dir, "sojourn_sweep.csv")?;
    writeln!(
        w,
        "alpha,beta,gamma,template,k,E_closed_form,E_generic,E_montecarlo,mc_stderr"
    )?;
    for r in &rows {
        writeln!(
            w,
            "{},{},{},{},{},{:.17e},{:.17e},{:.17e},{:.17e}",
            r.alpha,
            r.beta,
            r.gamma,
            r.template,
            r.k,
            r.e_closed_form,
            r.e_generic,
            r.e_montecarlo,
            r.mc_stderr
        )?;
    }
    drop(w);

    // Compact companion table: one expectation per row, closed-form route.
    let compact: Vec<_> = cells
        .iter()
        .flat_map(|p| templates.iter().map(move |t| (*p, t.clone())))
        .zip(&rows)
        .map(|((p, t), row)| (p, t, row.e_closed_form))
        .collect();
    write_expectation_sweep_csv(&compact, create_file(&dir, "sojourn_expectations.csv")?)?;

    let output = SojournOutput {
        seed: config.seed,
        rng: "chacha8",
        mc_samples: config.sojourn.mc_samples,
        rows,
        csv_path: dir.join("sojourn_sweep.csv"),
    };
    write_json(&dir, "sojourn_metadata.json", &output)?;
    Ok(output)
}
