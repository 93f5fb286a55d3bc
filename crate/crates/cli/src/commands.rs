use std::io::Write;
use std::path::Path;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use zdiff_core::chains::pascal::{pascal_generator_residual, pascal_stationarity_check, UniPoly};
use zdiff_core::chains::{embed, replica_rng, run_replica, sample_growth_prefixes};
use zdiff_core::generator::{convergence_residual, spectrum};
use zdiff_core::partitions::{enumerate_level, Partition};
use zdiff_core::symfunc::QPoly;
use zdiff_core::zmeasure::{boundary_expectation, LevelMeasure};
use zdiff_core::{format_rational, to_f64, Rational, ZParams};

use crate::config::{EvalSet, ExperimentConfig, Format};
use crate::error::CliError;
use crate::report::{sink, write_dynamic, write_rows};
use crate::suites::{run_all, SuiteLine};

/// Largest level on which the whole of `Y_n` is used as an evaluation set.
pub const EXHAUSTIVE_LIMIT: usize = 30;

/// Levels small enough to compare occupation counts against exact weights.
const EXACT_TV_LIMIT: usize = 12;

pub struct Output<'a> {
    pub path: Option<&'a Path>,
    pub format: Option<Format>,
}

impl Output<'_> {
    fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }
}

pub fn verify(cfg: &ExperimentConfig, out: &Output) -> Result<(), CliError> {
    let lines = run_all(cfg)?;
    let failed: Vec<&SuiteLine> = lines.iter().filter(|l| !l.passed).collect();
    let human = out.path.is_some() || out.format.is_none();
    if let Some(p) = out.path {
        write_rows(&mut *sink(Some(p))?, out.format(), "verify", &lines)?;
    } else if !human {
        write_rows(&mut *sink(None)?, out.format(), "verify", &lines)?;
    }
    if human {
        let mut w = sink(None)?;
        for l in &lines {
            let tag = if l.passed { "PASS" } else { "FAIL" };
            writeln!(w, "{tag} {:<22} {:<14} {}", l.suite, l.params, l.identity)?;
            if !l.passed {
                writeln!(w, "     {}", l.witness)?;
            }
        }
        writeln!(w, "{} of {} suites passed", lines.len() - failed.len(), lines.len())?;
    }
    match failed.first() {
        None => Ok(()),
        Some(l) => Err(CliError::Failed(format!("{} [{}]: {}", l.suite, l.params, l.witness))),
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumRow {
    pub params: String,
    pub m: usize,
    pub eigenvalue: String,
    pub multiplicity: usize,
}

pub fn spectrum_rows(cfg: &ExperimentConfig) -> Result<Vec<SpectrumRow>, CliError> {
    let mut rows = Vec::new();
    for pt in cfg.points()? {
        let spec = spectrum(cfg.degree, &pt)?;
        for (k, (value, mult)) in spec.into_iter().enumerate() {
            rows.push(SpectrumRow {
                params: pt.to_string(),
                // Row 0 is the constants; row k >= 1 is degree k + 1.
                m: if k == 0 { 0 } else { k + 1 },
                eigenvalue: format_rational(&value),
                multiplicity: mult,
            });
        }
    }
    Ok(rows)
}

pub fn spectrum_cmd(cfg: &ExperimentConfig, out: &Output) -> Result<(), CliError> {
    let rows = spectrum_rows(cfg)?;
    write_rows(&mut *sink(out.path)?, out.format(), "spectrum", &rows)
}

#[derive(Debug, Serialize)]
pub struct SimSummary {
    pub params: String,
    pub n: usize,
    pub replicas: usize,
    pub steps: usize,
    pub recorded: usize,
    pub moments: Vec<MomentSummary>,
    /// Total variation between recorded states and `M_n`, for small `n`.
    pub tv_exact_approx: Option<f64>,
}

#[derive(Debug, Serialize)]
pub struct MomentSummary {
    pub k: usize,
    pub target: String,
    pub mean_approx: f64,
    pub variance_approx: f64,
    /// Standard error from the spread of replica means.
    pub se_approx: Option<f64>,
    pub z_approx: Option<f64>,
}

struct ReplicaRun {
    records: Vec<(usize, Vec<Rational>)>,
    sums: Vec<f64>,
    squares: Vec<f64>,
    count: usize,
    occupation: Vec<usize>,
}

fn run_one(
    cfg: &ExperimentConfig,
    pt: &ZParams,
    replica: usize,
    keep: bool,
    level: Option<&LevelMeasure>,
) -> Result<ReplicaRun, CliError> {
    let sim = cfg.sim_config(pt.clone());
    let k = cfg.sim.moments.max(1);
    let mut run = ReplicaRun {
        records: Vec::new(),
        sums: vec![0.0; k],
        squares: vec![0.0; k],
        count: 0,
        occupation: vec![0; level.map_or(0, |l| l.level.len())],
    };
    let mut failure = None;
    run_replica(&sim, replica, |t, lam| {
        if t % sim.sample_interval != 0 || failure.is_some() {
            return;
        }
        let point = match embed(lam, k) {
            Ok(p) => p,
            Err(e) => {
                failure = Some(e);
                return;
            }
        };
        let qs: Vec<Rational> = (1..=k).map(|i| point.q(i).clone()).collect();
        for (i, q) in qs.iter().enumerate() {
            let x = to_f64(q);
            run.sums[i] += x;
            run.squares[i] += x * x;
        }
        run.count += 1;
        if let Some(l) = level {
            run.occupation[l.level.index_of(lam).expect("same level")] += 1;
        }
        if keep {
            run.records.push((t, qs));
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(run)
}

pub fn simulate_cmd(cfg: &ExperimentConfig, out: &Output) -> Result<(), CliError> {
    let k = cfg.sim.moments.max(1);
    let keep = out.path.is_some();
    let mut header = vec!["params".to_string(), "replica".to_string(), "t".to_string()];
    header.extend((1..=k).map(|i| format!("q{i}")));
    let mut table = Vec::new();
    let mut summaries = Vec::new();
    for pt in cfg.points()? {
        pt.require_admissible()?;
        let level = if cfg.sim.n <= EXACT_TV_LIMIT {
            Some(LevelMeasure::new(cfg.sim.n, &pt)?)
        } else {
            None
        };
        let runs = (0..cfg.sim.replicas)
            .into_par_iter()
            .map(|r| run_one(cfg, &pt, r, keep, level.as_ref()))
            .collect::<Result<Vec<_>, CliError>>()?;
        for (r, run) in runs.iter().enumerate() {
            for (t, qs) in &run.records {
                let mut row = vec![pt.to_string(), r.to_string(), t.to_string()];
                row.extend(qs.iter().map(format_rational));
                table.push(row);
            }
        }
        summaries.push(summarize(cfg, &pt, &runs, level.as_ref())?);
    }
    if let Some(p) = out.path {
        write_dynamic(&mut *sink(Some(p))?, Format::Csv, "simulate", &header, &table)?;
    }
    let mut w = sink(None)?;
    match out.format() {
        Format::Json => {
            serde_json::to_writer_pretty(&mut w, &summaries)?;
            writeln!(w)?;
        }
        Format::Csv => {
            for s in &summaries {
                writeln!(
                    w,
                    "params={} n={} replicas={} steps={} recorded={}",
                    s.params, s.n, s.replicas, s.steps, s.recorded
                )?;
                if let Some(tv) = s.tv_exact_approx {
                    writeln!(w, "  tv_to_exact_approx={tv:.5}")?;
                }
                for m in &s.moments {
                    writeln!(
                        w,
                        "  q{}: mean_approx={:.6} variance_approx={:.6} target={} se_approx={} z_approx={}",
                        m.k,
                        m.mean_approx,
                        m.variance_approx,
                        m.target,
                        m.se_approx.map_or("-".into(), |v| format!("{v:.6}")),
                        m.z_approx.map_or("-".into(), |v| format!("{v:.3}")),
                    )?;
                }
            }
        }
    }
    Ok(())
}

fn summarize(
    cfg: &ExperimentConfig,
    pt: &ZParams,
    runs: &[ReplicaRun],
    level: Option<&LevelMeasure>,
) -> Result<SimSummary, CliError> {
    let k = cfg.sim.moments.max(1);
    let total: usize = runs.iter().map(|r| r.count).sum();
    let mut moments = Vec::new();
    for i in 0..k {
        let var_name: QPoly = format!("q{}", i + 1).parse()?;
        let target = boundary_expectation(&var_name, pt)?;
        let mean = runs.iter().map(|r| r.sums[i]).sum::<f64>() / total as f64;
        let second = runs.iter().map(|r| r.squares[i]).sum::<f64>() / total as f64;
        let (se, z) = if runs.len() >= 2 {
            let means: Vec<f64> = runs.iter().map(|r| r.sums[i] / r.count as f64).collect();
            let m = means.iter().sum::<f64>() / means.len() as f64;
            let v = means.iter().map(|x| (x - m).powi(2)).sum::<f64>() / (means.len() - 1) as f64;
            let se = (v / means.len() as f64).sqrt();
            (Some(se), Some((mean - to_f64(&target)) / se))
        } else {
            (None, None)
        };
        moments.push(MomentSummary {
            k: i + 1,
            target: format_rational(&target),
            mean_approx: mean,
            variance_approx: second - mean * mean,
            se_approx: se,
            z_approx: z,
        });
    }
    let tv = level.map(|l| {
        let mut occ = vec![0usize; l.level.len()];
        for r in runs {
            for (o, c) in occ.iter_mut().zip(&r.occupation) {
                *o += c;
            }
        }
        occ.iter()
            .zip(&l.weights)
            .map(|(c, w)| (*c as f64 / total as f64 - to_f64(w)).abs())
            .sum::<f64>()
            / 2.0
    });
    Ok(SimSummary {
        params: pt.to_string(),
        n: cfg.sim.n,
        replicas: cfg.sim.replicas,
        steps: cfg.sim_config(pt.clone()).total_steps(),
        recorded: total,
        moments,
        tv_exact_approx: tv,
    })
}

#[derive(Debug, Serialize)]
pub struct RateRow {
    pub params: String,
    pub function: String,
    pub n: usize,
    pub residual: String,
    pub residual_approx: f64,
    pub ratio: String,
    pub ratio_approx: Option<f64>,
}

fn with_ratios(params: &str, function: &str, grid: &[usize], res: Vec<Rational>) -> Vec<RateRow> {
    let mut rows = Vec::new();
    for (i, (&n, r)) in grid.iter().zip(&res).enumerate() {
        let ratio = if i == 0 || res[i - 1].is_zero() {
            None
        } else {
            Some(r / &res[i - 1])
        };
        rows.push(RateRow {
            params: params.to_string(),
            function: function.to_string(),
            n,
            residual: format_rational(r),
            residual_approx: to_f64(r),
            ratio: ratio.as_ref().map_or(String::new(), format_rational),
            ratio_approx: ratio.as_ref().map(to_f64),
        });
    }
    rows
}

fn eval_sets(
    cfg: &ExperimentConfig,
    pt: &ZParams,
    grid: &[usize],
) -> Result<Vec<Vec<Partition>>, CliError> {
    match cfg.converge.eval {
        EvalSet::Exhaustive => {
            if let Some(n) = grid.iter().find(|&&n| n > EXHAUSTIVE_LIMIT) {
                return Err(CliError::Config(format!(
                    "exhaustive evaluation needs n <= {EXHAUSTIVE_LIMIT}, got {n}"
                )));
            }
            Ok(grid.iter().map(|&n| enumerate_level(n)).collect())
        }
        EvalSet::Sampled => {
            let mut sorted = grid.to_vec();
            sorted.sort_unstable();
            let paths = (0..cfg.converge.eval_samples as u64)
                .into_par_iter()
                .map(|i| {
                    let mut rng = replica_rng(cfg.sim.seed, i);
                    sample_growth_prefixes(&sorted, pt, &mut rng)
                })
                .collect::<zdiff_core::Result<Vec<_>>>()?;
            Ok(grid
                .iter()
                .map(|n| {
                    let j = sorted.iter().position(|m| m == n).expect("grid point");
                    paths.iter().map(|p| p[j].clone()).collect()
                })
                .collect())
        }
    }
}

pub fn converge_rows(cfg: &ExperimentConfig) -> Result<Vec<RateRow>, CliError> {
    let grid = &cfg.converge.grid;
    let mut rows = Vec::new();
    for pt in cfg.points()? {
        let sets = eval_sets(cfg, &pt, grid)?;
        for f in &cfg.converge.functions {
            let poly: QPoly = f.parse()?;
            let res = grid
                .iter()
                .zip(&sets)
                .map(|(&n, set)| convergence_residual(&poly, n, &pt, set))
                .collect::<zdiff_core::Result<Vec<_>>>()?;
            rows.extend(with_ratios(&pt.to_string(), f, grid, res));
        }
    }
    Ok(rows)
}

pub fn converge_cmd(cfg: &ExperimentConfig, out: &Output) -> Result<(), CliError> {
    let rows = converge_rows(cfg)?;
    write_rows(&mut *sink(out.path)?, out.format(), "converge", &rows)
}

pub const PASCAL_STATIONARITY_LIMIT: usize = 50;

pub fn pascal_rows(cfg: &ExperimentConfig) -> Result<Vec<RateRow>, CliError> {
    for n in 0..=PASCAL_STATIONARITY_LIMIT {
        pascal_stationarity_check(n).map_err(|v| CliError::Failed(v.to_string()))?;
    }
    let grid = &cfg.converge.grid;
    let mut rows = Vec::new();
    for &k in &cfg.converge.pascal_powers {
        let f = UniPoly::monomial(k);
        let res: Vec<Rational> = grid.iter().map(|&n| pascal_generator_residual(&f, n)).collect();
        rows.extend(with_ratios("-", &format!("x^{k}"), grid, res));
    }
    Ok(rows)
}

pub fn pascal_cmd(cfg: &ExperimentConfig, out: &Output) -> Result<(), CliError> {
    let rows = pascal_rows(cfg)?;
    write_rows(&mut *sink(out.path)?, out.format(), "pascal", &rows)
}
