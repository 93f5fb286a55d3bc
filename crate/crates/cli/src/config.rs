//! Experiment configuration, read from TOML. Rationals are kept as the
//! strings the user wrote and parsed on validation, so a config survives a
//! write/read cycle unchanged.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use zdiff_core::chains::{SimConfig, Variant};
use zdiff_core::{parse_rational, ZParams};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Verify,
    Spectrum,
    Simulate,
    Converge,
    Pascal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvalSet {
    /// Diagrams from `M_n`, one coupled growth path per sample.
    #[default]
    Sampled,
    /// All of `Y_n`; only allowed for `n <= 30`.
    Exhaustive,
}

/// One `(e, d)` point, as strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamPoint {
    pub e: String,
    pub d: String,
}

impl ParamPoint {
    pub fn new(e: &str, d: &str) -> Self {
        ParamPoint {
            e: e.to_string(),
            d: d.to_string(),
        }
    }

    pub fn parse(&self) -> Result<ZParams, CliError> {
        let e = parse_rational(&self.e).map_err(|err| CliError::Config(err.to_string()))?;
        let d = parse_rational(&self.d).map_err(|err| CliError::Config(err.to_string()))?;
        Ok(ZParams::classify(e, d))
    }

    /// `e=NUM/DEN,d=NUM/DEN`.
    pub fn from_flag(s: &str) -> Result<Self, CliError> {
        let mut e = None;
        let mut d = None;
        for part in s.split(',') {
            match part.split_once('=') {
                Some(("e", v)) => e = Some(v.trim().to_string()),
                Some(("d", v)) => d = Some(v.trim().to_string()),
                _ => return Err(CliError::Config(format!("bad --params entry {part:?}"))),
            }
        }
        match (e, d) {
            (Some(e), Some(d)) => {
                let p = ParamPoint { e, d };
                p.parse()?;
                Ok(p)
            }
            _ => Err(CliError::Config(format!("--params needs e and d, got {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimSection {
    pub seed: u64,
    pub n: usize,
    pub replicas: usize,
    pub burn_in: usize,
    pub sample_interval: usize,
    pub samples: usize,
    /// Moments `q_1..q_K` written per recorded step.
    pub moments: usize,
    pub down_up: bool,
}

impl Default for SimSection {
    fn default() -> Self {
        SimSection {
            seed: 1,
            n: 50,
            replicas: 4,
            burn_in: 0,
            sample_interval: 1,
            samples: 1000,
            moments: 2,
            down_up: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConvergeSection {
    pub grid: Vec<usize>,
    /// Polynomials in `q_1, q_2, …` such as `q1^2 - q2`.
    pub functions: Vec<String>,
    /// Exponents `k` for the Pascal test functions `x^k`.
    pub pascal_powers: Vec<usize>,
    pub eval: EvalSet,
    pub eval_samples: usize,
}

impl Default for ConvergeSection {
    fn default() -> Self {
        ConvergeSection {
            grid: vec![20, 40, 80, 160],
            functions: vec!["q1".into()],
            pascal_powers: vec![1, 2, 3],
            eval: EvalSet::Sampled,
            eval_samples: 50,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OutputSection {
    pub path: Option<PathBuf>,
    pub format: Option<Format>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ExperimentConfig {
    pub command: Option<CommandKind>,
    pub params: Vec<ParamPoint>,
    /// Largest level for the exact suites.
    pub max_n: usize,
    /// Degree `D` for the spectrum.
    pub degree: usize,
    pub degree_cap: usize,
    /// Truncation `N` for the sl(2) checks.
    pub truncation: usize,
    pub inject_fault: Option<String>,
    pub sim: SimSection,
    pub converge: ConvergeSection,
    pub output: OutputSection,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            command: None,
            params: vec![ParamPoint::new("1", "6/25"), ParamPoint::new("0", "1")],
            max_n: 6,
            degree: 8,
            degree_cap: 10,
            truncation: 5,
            inject_fault: None,
            sim: SimSection::default(),
            converge: ConvergeSection::default(),
            output: OutputSection::default(),
        }
    }
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self, CliError> {
        let cfg: ExperimentConfig =
            toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Every rational parses and the sizes make sense.
    pub fn validate(&self) -> Result<(), CliError> {
        if self.params.is_empty() {
            return Err(CliError::Config("no parameter points".into()));
        }
        self.points()?;
        if self.degree > self.degree_cap {
            return Err(CliError::Config(format!(
                "degree {} exceeds the cap {}",
                self.degree, self.degree_cap
            )));
        }
        if self.max_n == 0 || self.truncation == 0 {
            return Err(CliError::Config("max_n and truncation must be positive".into()));
        }
        if self.sim.sample_interval == 0 || self.sim.n == 0 {
            return Err(CliError::Config("sim.n and sim.sample_interval must be positive".into()));
        }
        for f in &self.converge.functions {
            f.parse::<zdiff_core::symfunc::QPoly>()
                .map_err(|e| CliError::Config(format!("function {f:?}: {e}")))?;
        }
        Ok(())
    }

    pub fn points(&self) -> Result<Vec<ZParams>, CliError> {
        self.params.iter().map(ParamPoint::parse).collect()
    }

    pub fn sim_config(&self, params: ZParams) -> SimConfig {
        let mut cfg = SimConfig::new(self.sim.n, params, self.sim.seed);
        cfg.replicas = self.sim.replicas;
        cfg.burn_in = self.sim.burn_in;
        cfg.sample_interval = self.sim.sample_interval;
        cfg.samples = self.sim.samples;
        cfg.variant = if self.sim.down_up {
            Variant::DownUp
        } else {
            Variant::UpDown
        };
        cfg
    }
}
