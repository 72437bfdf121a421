//! `hhwalk figures`: per-parameter bar-chart panels of the stationary
//! distribution against the simple random walk, plus the three limit
//! panels.

use std::io::Write;
use std::path::{Path, PathBuf};

use hhwalk::graph::CommunityTemplate;
use hhwalk::sojourn::{
    expected_sojourn, stationary_from_expectations, stationary_household, stationary_srw,
};
use hhwalk::walk::Node2vecParams;
use hhwalk::{HouseholdGraph, StationaryDistribution};
use serde::Serialize;

use crate::commands::{build_model, create_file, ensure_out_dir, param_tag, write_json, ModelMeta};
use crate::config::{ExperimentConfig, ParamsSpec};
use crate::svg::{write_bar_chart, Series};
use crate::CliError;

#[derive(Debug, Clone, Serialize)]
pub struct Panel {
    pub name: String,
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub csv: String,
    pub svg: String,
    /// Exact assembly at proxy parameters for the two infinite limits,
    /// formula route for the alpha = 0 panel, plain otherwise.
    pub kind: &'static str,
}

#[derive(Debug, Serialize)]
pub struct FiguresOutput {
    pub seed: u64,
    pub rng: &'static str,
    pub grid_note: String,
    pub model: ModelMeta,
    pub panels: Vec<Panel>,
    #[serde(skip)]
    pub dir: PathBuf,
}

/// One bar category per community type present in the model.
struct Categories {
    labels: Vec<String>,
    representative: Vec<u32>,
    counts: Vec<usize>,
    degrees: Vec<usize>,
}

fn categories(hh: &HouseholdGraph) -> Categories {
    let mut templates: Vec<(&CommunityTemplate, u32, usize)> = Vec::new();
    for info in hh.communities() {
        match templates.iter_mut().find(|(t, _, _)| **t == info.template) {
            Some((_, _, count)) => *count += info.size() as usize,
            None => templates.push((&info.template, info.members.start, info.size() as usize)),
        }
    }
    templates.sort_by_key(|(t, _, _)| (t.size(), t.label()));
    Categories {
        labels: templates.iter().map(|(t, _, _)| t.label()).collect(),
        representative: templates.iter().map(|(_, v, _)| *v).collect(),
        counts: templates.iter().map(|(_, _, c)| *c).collect(),
        degrees: templates
            .iter()
            .map(|(_, v, _)| hh.graph().degree(*v))
            .collect(),
    }
}

fn write_panel(
    dir: &Path,
    name: &str,
    title: &str,
    hh: &HouseholdGraph,
    cats: &Categories,
    walk: &StationaryDistribution,
    srw: &StationaryDistribution,
) -> Result<(String, String), CliError> {
    let csv_name = format!("figure_{name}.csv");
    let svg_name = format!("figure_{name}.svg");

    let walk_values: Vec<f64> = cats.representative.iter().map(|&v| walk.get(v)).collect();
    let srw_values: Vec<f64> = cats.representative.iter().map(|&v| srw.get(v)).collect();

    let mut w = create_file(dir, &csv_name)?;
    writeln!(w, "template,k,degree,count,pi_node2vec,pi_srw")?;
    for (i, label) in cats.labels.iter().enumerate() {
        writeln!(
            w,
            "{label},{},{},{},{:.17e},{:.17e}",
            hh.template_of_node(cats.representative[i]).size(),
            cats.degrees[i],
            cats.counts[i],
            walk_values[i],
            srw_values[i],
        )?;
    }
    drop(w);

    let svg_file = create_file(dir, &svg_name)?;
    write_bar_chart(
        title,
        "community type",
        "stationary probability",
        &cats.labels,
        &[
            Series {
                name: "node2vec walk",
                color: "#ff7f0e",
                values: &walk_values,
            },
            Series {
                name: "simple random walk",
                color: "#1f77b4",
                values: &srw_values,
            },
        ],
        svg_file,
    )?;
    Ok((csv_name, svg_name))
}

pub fn figures(config: &ExperimentConfig) -> Result<FiguresOutput, CliError> {
    let model = build_model(config)?;
    let dir = ensure_out_dir(config)?;
    let hh = &model.household;
    let cats = categories(hh);
    let srw = stationary_srw(hh.graph());

    // Default sweep when the config has no grid: alpha x beta with gamma
    // fixed at one; beta = gamma is skipped since both walks coincide
    // there.
    let (cells, grid_note) = match &config.params {
        ParamsSpec::Grid { .. } => (config.params.cells()?, "grid from config".to_string()),
        ParamsSpec::Single { .. } => {
            let mut cells = Vec::new();
            for &a in &[0.5, 1.0, 10.0] {
                for &b in &[0.1, 10.0] {
                    cells.push(Node2vecParams::new(a, b, 1.0)?);
                }
            }
            (
                cells,
                "default sweep alpha in {0.5, 1, 10}, beta in {0.1, 10}, gamma = 1".to_string(),
            )
        }
    };

    let mut panels = Vec::new();
    for params in &cells {
        let analytic = stationary_household(hh, params)?;
        let tag = param_tag(params);
        let title = format!(
            "alpha = {}, beta = {}, gamma = {}",
            params.alpha, params.beta, params.gamma
        );
        let (csv, svg) = write_panel(&dir, &tag, &title, hh, &cats, &analytic, &srw)?;
        panels.push(Panel {
            name: tag,
            alpha: params.alpha,
            beta: params.beta,
            gamma: params.gamma,
            csv,
            svg,
            kind: "exact",
        });
    }

    // Limit panels. The two infinite limits are proxied at 1e6 through the
    // exact assembly; the alpha = 0 panel evaluates the formulas directly,
    // which stay valid there even though the assembly requires alpha > 0.
    let limit_beta = 10.0;
    let limit_cases: [(&str, Node2vecParams); 2] = [
        ("alpha_inf", Node2vecParams::new(1e6, limit_beta, 1.0)?),
        ("gamma_inf", Node2vecParams::new(1.0, limit_beta, 1e6)?),
    ];
    for (name, params) in limit_cases {
        let analytic = stationary_household(hh, &params)?;
        let title = format!(
            "{name} proxy: alpha = {}, beta = {}, gamma = {}",
            params.alpha, params.beta, params.gamma
        );
        let (csv, svg) = write_panel(&dir, name, &title, hh, &cats, &analytic, &srw)?;
        panels.push(Panel {
            name: name.to_string(),
            alpha: params.alpha,
            beta: params.beta,
            gamma: params.gamma,
            csv,
            svg,
            kind: "limit-proxy",
        });
    }
    let alpha0 = Node2vecParams::new(0.0, limit_beta, 1.0)?;
    let analytic0 = stationary_from_expectations(hh, |t| expected_sojourn(t, &alpha0))?;
    let (csv, svg) = write_panel(
        &dir,
        "alpha0",
        &format!("alpha = 0, beta = {limit_beta}, gamma = 1 (formula route)"),
        hh,
        &cats,
        &analytic0,
        &srw,
    )?;
    panels.push(Panel {
        name: "alpha0".into(),
        alpha: 0.0,
        beta: limit_beta,
        gamma: 1.0,
        csv,
        svg,
        kind: "limit-formula",
    });

    let output = FiguresOutput {
        seed: config.seed,
        rng: "chacha8",
        grid_note,
        model: model.meta,
        panels,
        dir: dir.clone(),
    };
    write_json(&dir, "figures_metadata.json", &output)?;
    Ok(output)
}
