//! The `hhwalk` binary: household-model generation, walk simulation, and
//! stationary-distribution experiments driven by a JSON config.
//!
//! Exit codes: 0 on success, 1 on validation failures (config, inputs,
//! graph construction), 2 when exact routes disagree beyond tolerance.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hhwalk_cli::commands;
use hhwalk_cli::config::{ExperimentConfig, Overrides};
use hhwalk_cli::CliError;

#[derive(Parser)]
#[command(name = "hhwalk", version, about = "node2vec walks on household models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Experiment configuration (JSON).
    #[arg(long)]
    config: PathBuf,

    /// Override the config seed (beats the HHWALK_SEED environment variable).
    #[arg(long)]
    seed: Option<u64>,

    /// Override the output directory.
    #[arg(long)]
    out_dir: Option<PathBuf>,

    /// Override the oracle solver tolerance.
    #[arg(long)]
    tol: Option<f64>,

    /// Override the walk length.
    #[arg(long)]
    steps: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the model and write edge lists, community map, metadata.
    Generate(CommonArgs),
    /// Compare analytic, oracle, empirical and simple-random-walk
    /// stationary distributions.
    Compare(CommonArgs),
    /// Sweep expected sojourn times: closed form, generic solver, Monte
    /// Carlo.
    Sojourn(CommonArgs),
    /// Emit per-parameter bar-chart panels (CSV + SVG) and limit panels.
    Figures(CommonArgs),
    /// Solve the directed-edge chain and dump edge and node distributions.
    Oracle(CommonArgs),
    /// Run one walk and dump occupancy (and optionally a trajectory head).
    Walk(WalkArgs),
}

#[derive(Args)]
struct WalkArgs {
    #[command(flatten)]
    common: CommonArgs,

    /// Also write the first N trajectory rows.
    #[arg(long, value_name = "N")]
    trajectory: Option<usize>,
}

fn load(common: &CommonArgs) -> Result<ExperimentConfig, CliError> {
    let mut config = ExperimentConfig::load(&common.config)?;
    config.apply_overrides(
        &Overrides {
            seed: common.seed,
            out_dir: common.out_dir.clone(),
            tol: common.tol,
            steps: common.steps,
        },
        ExperimentConfig::env_seed(),
    );
    config.validate()?;
    Ok(config)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Generate(args) => {
            let out = commands::generate(&load(args)?)?;
            println!(
                "generated {} nodes / {} edges (universe {} / {}), sum of degrees even: {}, connected: {}",
                out.meta.household_nodes,
                out.meta.household_edges,
                out.meta.n_universe,
                out.meta.universe_edges,
                out.meta.degree_sum_even,
                out.meta.connected,
            );
            println!("wrote {}", out.metadata.display());
        }
        Command::Compare(args) => {
            let out = commands::compare(&load(args)?)?;
            for cell in &out.cells {
                println!(
                    "alpha={} beta={} gamma={}: |analytic - oracle|_max = {:.3e}, TV(empirical, oracle) = {:.3e}",
                    cell.alpha,
                    cell.beta,
                    cell.gamma,
                    cell.max_abs_diff_analytic_oracle,
                    cell.tv_empirical_oracle,
                );
            }
            println!("wrote {}", out.summary_path.display());
        }
        Command::Sojourn(args) => {
            let out = commands::sojourn(&load(args)?)?;
            println!(
                "swept {} rows ({} Monte-Carlo samples each); wrote {}",
                out.rows.len(),
                out.mc_samples,
                out.csv_path.display()
            );
        }
        Command::Figures(args) => {
            let out = commands::figures(&load(args)?)?;
            println!("{}", out.grid_note);
            for panel in &out.panels {
                println!("panel {}: {} / {}", panel.name, panel.csv, panel.svg);
            }
        }
        Command::Oracle(args) => {
            let out = commands::oracle(&load(args)?)?;
            println!(
                "solved {} states ({}, tol {:.1e}); balance residual {:.3e}",
                out.states, out.method, out.tol, out.balance_residual
            );
            println!(
                "wrote {} and {}",
                out.edge_csv.display(),
                out.node_csv.display()
            );
        }
        Command::Walk(args) => {
            let out = commands::walk(&load(&args.common)?, args.trajectory)?;
            println!(
                "walked {} steps (alpha={} beta={} gamma={}); wrote {}",
                out.steps,
                out.alpha,
                out.beta,
                out.gamma,
                out.occupancy_csv.display()
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
