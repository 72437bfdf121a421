//! The experiment configuration: one JSON document, no hidden state.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use hhwalk::graph::CommunityTemplate;
use hhwalk::walk::Node2vecParams;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Environment variable that overrides the config seed (the `--seed` flag
/// overrides both).
pub const SEED_ENV_VAR: &str = "HHWALK_SEED";

fn default_walk_steps() -> u64 {
    1_000_000
}

fn default_out_dir() -> PathBuf {
    PathBuf::from("out")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub seed: u64,
    pub n_universe: usize,
    pub degrees: DegreeSource,
    #[serde(default)]
    pub templates: TemplateMap,
    #[serde(default)]
    pub params: ParamsSpec,
    #[serde(default = "default_walk_steps")]
    pub walk_steps: u64,
    #[serde(default)]
    pub oracle: OracleSpec,
    #[serde(default)]
    pub sojourn: SojournSpec,
    #[serde(default = "default_out_dir")]
    pub out_dir: PathBuf,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeSource {
    /// Degrees i.i.d. Poisson(lambda) conditioned on >= 1, sum made even.
    Poisson { lambda: f64 },
    /// An explicit degree list; must have `n_universe` entries.
    Explicit(Vec<u32>),
    /// Whitespace-separated degrees read from a file.
    File(PathBuf),
}

/// Maps universe degrees to community template kinds.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemplateMap {
    #[serde(default)]
    pub default: TemplateKind,
    #[serde(default)]
    pub by_degree: BTreeMap<u32, TemplateKind>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TemplateKind {
    #[default]
    Clique,
    Ring,
}

impl TemplateMap {
    pub fn template_for(&self, degree: u32) -> CommunityTemplate {
        let kind = self.by_degree.get(&degree).copied().unwrap_or(self.default);
        match kind {
            TemplateKind::Clique => CommunityTemplate::clique(degree),
            TemplateKind::Ring => CommunityTemplate::ring(degree),
        }
    }
}

/// A single parameter triple or a grid of them.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamsSpec {
    Single { alpha: f64, beta: f64, gamma: f64 },
    Grid { grid: GridSpec },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridSpec {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
}

impl Default for ParamsSpec {
    fn default() -> Self {
        ParamsSpec::Single {
            alpha: 1.0,
            beta: 1.0,
            gamma: 1.0,
        }
    }
}

impl ParamsSpec {
    /// All parameter cells, gamma-major last: the grid is the cartesian
    /// product in (alpha, beta, gamma) order.
    pub fn cells(&self) -> Result<Vec<Node2vecParams>, CliError> {
        let cells = match self {
            ParamsSpec::Single { alpha, beta, gamma } => {
                vec![Node2vecParams::new(*alpha, *beta, *gamma)?]
            }
            ParamsSpec::Grid { grid } => {
                let mut cells = Vec::new();
                for &a in &grid.alpha {
                    for &b in &grid.beta {
                        for &g in &grid.gamma {
                            cells.push(Node2vecParams::new(a, b, g)?);
                        }
                    }
                }
                cells
            }
        };
        if cells.is_empty() {
            return Err(CliError::Validation("parameter grid is empty".into()));
        }
        Ok(cells)
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSpec {
    #[serde(default)]
    pub method: OracleMethod,
    #[serde(default = "default_tol")]
    pub tol: f64,
}

fn default_tol() -> f64 {
    1e-12
}

impl Default for OracleSpec {
    fn default() -> Self {
        Self {
            method: OracleMethod::default(),
            tol: default_tol(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OracleMethod {
    #[default]
    Direct,
    Power,
}

impl OracleMethod {
    pub fn to_solve_method(self) -> hhwalk::oracle::SolveMethod {
        match self {
            OracleMethod::Direct => hhwalk::oracle::SolveMethod::DirectSolve,
            OracleMethod::Power => hhwalk::oracle::SolveMethod::PowerIteration,
        }
    }
}

/// Templates and sample counts for the sojourn sweep.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SojournSpec {
    #[serde(default = "default_mc_samples")]
    pub mc_samples: usize,
    #[serde(default = "default_sojourn_templates")]
    pub templates: Vec<TemplateRef>,
}

fn default_mc_samples() -> usize {
    100_000
}

fn default_sojourn_templates() -> Vec<TemplateRef> {
    let mut t: Vec<TemplateRef> = (1..=6)
        .map(|k| TemplateRef {
            kind: TemplateKind::Clique,
            k,
        })
        .collect();
    t.push(TemplateRef {
        kind: TemplateKind::Ring,
        k: 6,
    });
    t.push(TemplateRef {
        kind: TemplateKind::Ring,
        k: 7,
    });
    t
}

impl Default for SojournSpec {
    fn default() -> Self {
        Self {
            mc_samples: default_mc_samples(),
            templates: default_sojourn_templates(),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TemplateRef {
    pub kind: TemplateKind,
    pub k: u32,
}

impl TemplateRef {
    pub fn to_template(self) -> CommunityTemplate {
        match self.kind {
            TemplateKind::Clique => CommunityTemplate::clique(self.k),
            TemplateKind::Ring => CommunityTemplate::ring(self.k),
        }
    }
}

/// Command-line overrides; flags beat the environment, which beats the
/// config file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub out_dir: Option<PathBuf>,
    pub tol: Option<f64>,
    pub steps: Option<u64>,
}

impl ExperimentConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Validation(format!("cannot read config {}: {e}", path.display()))
        })?;
        let config: ExperimentConfig = serde_json::from_str(&text)
            .map_err(|e| CliError::Validation(format!("invalid config: {e}")))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_universe < 2 {
            return Err(CliError::Validation("n_universe must be at least 2".into()));
        }
        match &self.degrees {
            DegreeSource::Poisson { lambda } => {
                if *lambda <= 0.0 || lambda.is_nan() {
                    return Err(CliError::Validation(format!(
                        "lambda must be positive, got {lambda}"
                    )));
                }
            }
            DegreeSource::Explicit(values) => {
                if values.len() != self.n_universe {
                    return Err(CliError::Validation(format!(
                        "explicit degrees have {} entries, n_universe is {}",
                        values.len(),
                        self.n_universe
                    )));
                }
            }
            DegreeSource::File(path) => {
                if !path.exists() {
                    return Err(CliError::Validation(format!(
                        "degree file {} does not exist",
                        path.display()
                    )));
                }
            }
        }
        if self.walk_steps == 0 {
            return Err(CliError::Validation("walk_steps must be positive".into()));
        }
        self.params.cells().map(|_| ())
    }

    /// Applies flag and environment overrides.
    pub fn apply_overrides(&mut self, overrides: &Overrides, env_seed: Option<u64>) {
        if let Some(seed) = overrides.seed.or(env_seed) {
            self.seed = seed;
        }
        if let Some(dir) = &overrides.out_dir {
            self.out_dir = dir.clone();
        }
        if let Some(tol) = overrides.tol {
            self.oracle.tol = tol;
        }
        if let Some(steps) = overrides.steps {
            self.walk_steps = steps;
        }
    }

    /// The seed from the environment variable, if set and parseable.
    pub fn env_seed() -> Option<u64> {
        std::env::var(SEED_ENV_VAR).ok()?.parse().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn minimal() -> ExperimentConfig {
        serde_json::from_str(
            r#"{"seed": 42, "n_universe": 10, "degrees": {"poisson": {"lambda": 4.0}}}"#,
        )
        .unwrap()
    }

    #[test]
    fn minimal_config_fills_defaults() {
        let cfg = minimal();
        assert_eq!(cfg.walk_steps, 1_000_000);
        assert_eq!(cfg.oracle.method, OracleMethod::Direct);
        assert_eq!(cfg.oracle.tol, 1e-12);
        assert_eq!(cfg.out_dir, PathBuf::from("out"));
        assert!(cfg.validate().is_ok());
        assert_eq!(cfg.params.cells().unwrap().len(), 1);
    }

    #[test]
    fn grid_parses_and_expands() {
        let cfg: ExperimentConfig = serde_json::from_str(
            r#"{
                "seed": 1, "n_universe": 5,
                "degrees": {"explicit": [3, 3, 2, 2, 2]},
                "params": {"grid": {"alpha": [0.5, 1.0], "beta": [0.1, 10.0], "gamma": [1.0]}}
            }"#,
        )
        .unwrap();
        assert!(cfg.validate().is_ok());
        assert_eq!(cfg.params.cells().unwrap().len(), 4);
    }

    #[test]
    fn empty_grid_is_rejected() {
        let cfg: ExperimentConfig = serde_json::from_str(
            r#"{
                "seed": 1, "n_universe": 4,
                "degrees": {"explicit": [3, 3, 3, 3]},
                "params": {"grid": {"alpha": [], "beta": [1.0], "gamma": [1.0]}}
            }"#,
        )
        .unwrap();
        assert!(matches!(cfg.validate(), Err(CliError::Validation(_))));
    }

    #[test]
    fn explicit_length_mismatch_is_rejected() {
        let cfg: ExperimentConfig = serde_json::from_str(
            r#"{"seed": 1, "n_universe": 3, "degrees": {"explicit": [3, 3]}}"#,
        )
        .unwrap();
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let r: Result<ExperimentConfig, _> = serde_json::from_str(
            r#"{"seed": 1, "n_universe": 3, "degrees": {"poisson": {"lambda": 4}}, "bogus": 1}"#,
        );
        assert!(r.is_err());
    }

    #[test]
    fn overrides_have_precedence() {
        let mut cfg = minimal();
        cfg.apply_overrides(&Overrides::default(), Some(7));
        assert_eq!(cfg.seed, 7);
        cfg.apply_overrides(
            &Overrides {
                seed: Some(9),
                ..Default::default()
            },
            Some(7),
        );
        assert_eq!(cfg.seed, 9);
    }

    #[test]
    fn template_map_dispatches_by_degree() {
        let map: TemplateMap =
            serde_json::from_str(r#"{"default": "clique", "by_degree": {"7": "ring"}}"#).unwrap();
        assert_eq!(map.template_for(3), CommunityTemplate::clique(3));
        assert_eq!(map.template_for(7), CommunityTemplate::ring(7));
    }
}
