//! The experiment verbs. Each command is a function of the config alone;
//! reruns with the same config and seed produce byte-identical files.

mod compare;
mod figures;
mod generate;
mod oracle_cmd;
mod sojourn;
mod walk_cmd;

pub use compare::{compare, CompareOutput, COMPARE_TOL};
pub use figures::{figures, FiguresOutput};
pub use generate::{generate, GenerateOutput};
pub use oracle_cmd::{oracle, OracleOutput};
pub use sojourn::{sojourn, SojournOutput};
pub use walk_cmd::{walk, WalkOutput};

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use hhwalk::graph::{
    expand_household, sample_poisson_degrees, sample_universe_configuration_model,
    validate_household, DegreeSequence, HouseholdGraph, DEFAULT_CONFIG_MODEL_RETRIES,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{DegreeSource, ExperimentConfig};
use crate::CliError;

/// RNG stream ids per purpose, all derived from the one config seed.
pub(crate) mod streams {
    pub const GRAPH: u64 = 0;
    pub const WALK: u64 = 1;
    /// Grid cells add their index to this base.
    pub const GRID_BASE: u64 = 16;
    /// Sojourn Monte-Carlo cells add their index to this base.
    pub const SOJOURN_BASE: u64 = 1 << 32;
}

/// One ChaCha8 stream of the experiment seed.
pub(crate) fn rng_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Model provenance written into every metadata file.
#[derive(Debug, Clone, Serialize)]
pub struct ModelMeta {
    pub seed: u64,
    pub rng: &'static str,
    pub n_universe: usize,
    pub degree_source: String,
    pub degree_min: u32,
    pub degree_max: u32,
    pub degree_mean: f64,
    pub degree_sum_even: bool,
    pub universe_edges: usize,
    pub household_nodes: usize,
    pub household_edges: usize,
    pub connected: bool,
    pub contains_triangle: bool,
}

pub struct BuiltModel {
    pub household: HouseholdGraph,
    pub meta: ModelMeta,
}

fn degree_sequence(
    config: &ExperimentConfig,
    rng: &mut ChaCha8Rng,
) -> Result<DegreeSequence, CliError> {
    match &config.degrees {
        DegreeSource::Poisson { lambda } => {
            Ok(sample_poisson_degrees(config.n_universe, *lambda, rng)?)
        }
        DegreeSource::Explicit(values) => Ok(DegreeSequence::new(values.clone())?),
        DegreeSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                CliError::Validation(format!("cannot read degree file {}: {e}", path.display()))
            })?;
            let values: Result<Vec<u32>, _> =
                text.split_whitespace().map(|t| t.parse::<u32>()).collect();
            let values = values.map_err(|e| {
                CliError::Validation(format!("bad degree in {}: {e}", path.display()))
            })?;
            if values.len() != config.n_universe {
                return Err(CliError::Validation(format!(
                    "degree file has {} entries, n_universe is {}",
                    values.len(),
                    config.n_universe
                )));
            }
            Ok(DegreeSequence::new(values)?)
        }
    }
}

/// Builds the household model of a config: degrees, configuration model,
/// expansion, validation.
pub fn build_model(config: &ExperimentConfig) -> Result<BuiltModel, CliError> {
    let mut rng = rng_stream(config.seed, streams::GRAPH);
    let degrees = degree_sequence(config, &mut rng)?;
    let universe =
        sample_universe_configuration_model(&degrees, &mut rng, DEFAULT_CONFIG_MODEL_RETRIES)
            .map_err(|e| {
                CliError::Validation(format!(
                    "configuration model failed: {e}; try another seed or degree sequence"
                ))
            })?;
    let household = expand_household(&universe, |d| config.templates.template_for(d))?;
    let report = validate_household(&household);
    // Triangle absence is tolerated here; commands that need aperiodicity
    // fail with a clear message downstream.
    if report
        .violations
        .iter()
        .any(|v| !matches!(v, hhwalk::graph::Violation::NoTriangle))
    {
        let list: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
        return Err(CliError::Validation(format!(
            "household validation failed: {}",
            list.join("; ")
        )));
    }

    let values = degrees.values();
    let meta = ModelMeta {
        seed: config.seed,
        rng: "chacha8",
        n_universe: config.n_universe,
        degree_source: match &config.degrees {
            DegreeSource::Poisson { lambda } => format!("poisson(lambda={lambda})"),
            DegreeSource::Explicit(_) => "explicit".into(),
            DegreeSource::File(p) => format!("file({})", p.display()),
        },
        degree_min: values.iter().copied().min().unwrap_or(0),
        degree_max: values.iter().copied().max().unwrap_or(0),
        degree_mean: degrees.sum() as f64 / values.len() as f64,
        degree_sum_even: degrees.sum() % 2 == 0,
        universe_edges: universe.edge_count(),
        household_nodes: household.node_count(),
        household_edges: household.graph().edge_count(),
        connected: household.graph().is_connected(),
        contains_triangle: household.graph().contains_triangle(),
    };
    Ok(BuiltModel { household, meta })
}

pub(crate) fn ensure_out_dir(config: &ExperimentConfig) -> Result<PathBuf, CliError> {
    std::fs::create_dir_all(&config.out_dir)?;
    Ok(config.out_dir.clone())
}

pub(crate) fn create_file(dir: &Path, name: &str) -> Result<BufWriter<File>, CliError> {
    let path = dir.join(name);
    Ok(BufWriter::new(File::create(path)?))
}

pub(crate) fn write_json<T: Serialize>(dir: &Path, name: &str, value: &T) -> Result<(), CliError> {
    let mut file = create_file(dir, name)?;
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Validation(format!("serialization failed: {e}")))?;
    file.write_all(text.as_bytes())?;
    file.write_all(b"\n")?;
    Ok(())
}

/// Compact parameter tag for file names: `a0.5_b10_g1`.
pub(crate) fn param_tag(p: &hhwalk::walk::Node2vecParams) -> String {
    fn fmt(x: f64) -> String {
        if x == x.trunc() && x.abs() < 1e15 {
            format!("{}", x as i64)
        } else {
            format!("{x}")
        }
    }
    format!("a{}_b{}_g{}", fmt(p.alpha), fmt(p.beta), fmt(p.gamma))
}
