//! Driver for the exact verification suites and the numerical experiments.

pub mod commands;
pub mod config;
pub mod error;
pub mod report;
pub mod suites;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::commands::Output;
use crate::config::{CommandKind, ExperimentConfig, Format, ParamPoint};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "zdiff", version, about = "z-measures, up-down chains and their diffusion limit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Cmd>,
    /// TOML experiment config.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// `e=NUM/DEN,d=NUM/DEN`; repeat for several points.
    #[arg(long, global = true)]
    pub params: Vec<String>,
    /// Largest level for `verify`; the level itself for `simulate`.
    #[arg(long, global = true)]
    pub max_n: Option<usize>,
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// Test functions for `converge`, e.g. `q1^2`.
    #[arg(long = "function", global = true)]
    pub functions: Vec<String>,
    /// Comma-separated levels for `converge` and `pascal`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub grid: Vec<usize>,
    /// Deliberately break one suite (test hook).
    #[arg(long, global = true)]
    pub inject_fault: Option<String>,
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum Cmd {
    /// Run every exact suite; exit 1 on the first failed identity.
    Verify,
    /// Eigenvalues of the generator on polynomials of degree <= D.
    Spectrum,
    /// Run the chain and compare moments with their exact limits.
    Simulate,
    /// Residuals of n^2 (T_n - 1) f against A f along a grid of n.
    Converge,
    /// The same rate experiment for the Pascal-triangle chain.
    Pascal,
}

impl From<Cmd> for CommandKind {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Verify => CommandKind::Verify,
            Cmd::Spectrum => CommandKind::Spectrum,
            Cmd::Simulate => CommandKind::Simulate,
            Cmd::Converge => CommandKind::Converge,
            Cmd::Pascal => CommandKind::Pascal,
        }
    }
}

/// The config file (or defaults) with command-line overrides applied.
pub fn resolve(cli: &Cli) -> Result<ExperimentConfig, CliError> {
    let mut cfg = match &cli.config {
        Some(p) => ExperimentConfig::load(p)?,
        None => ExperimentConfig::default(),
    };
    if let Some(c) = cli.command {
        cfg.command = Some(c.into());
    }
    if !cli.params.is_empty() {
        cfg.params = cli
            .params
            .iter()
            .map(|s| ParamPoint::from_flag(s))
            .collect::<Result<_, _>>()?;
    }
    if let Some(s) = cli.seed {
        cfg.sim.seed = s;
    }
    if let Some(n) = cli.max_n {
        cfg.max_n = n;
        cfg.sim.n = n;
    }
    if let Some(d) = cli.degree {
        cfg.degree = d;
    }
    if !cli.functions.is_empty() {
        cfg.converge.functions = cli.functions.clone();
    }
    if !cli.grid.is_empty() {
        cfg.converge.grid = cli.grid.clone();
    }
    if cli.inject_fault.is_some() {
        cfg.inject_fault = cli.inject_fault.clone();
    }
    if cli.out.is_some() {
        cfg.output.path = cli.out.clone();
    }
    if cli.format.is_some() {
        cfg.output.format = cli.format;
    }
    cfg.validate()?;
    Ok(cfg)
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    let cfg = resolve(cli)?;
    let out = Output {
        path: cfg.output.path.as_deref(),
        format: cfg.output.format,
    };
    match cfg.command {
        Some(CommandKind::Verify) => commands::verify(&cfg, &out),
        Some(CommandKind::Spectrum) => commands::spectrum_cmd(&cfg, &out),
        Some(CommandKind::Simulate) => commands::simulate_cmd(&cfg, &out),
        Some(CommandKind::Converge) => commands::converge_cmd(&cfg, &out),
        Some(CommandKind::Pascal) => commands::pascal_cmd(&cfg, &out),
        None => Err(CliError::Config(
            "no command: pass a subcommand or set `command` in the config".into(),
        )),
    }
}
