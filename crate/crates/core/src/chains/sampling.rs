//! Seeded sampling with exact rational thresholds.
//!
//! Each draw uses a 128-bit uniform `U` and picks the first outcome whose
//! cumulative probability exceeds `U / 2^128`. The only bias comes from the
//! finite resolution of `U`.

use num_bigint::BigInt;
use rand::RngCore;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;

use super::Variant;
use crate::partitions::Partition;
use crate::zmeasure::{down_row, up_row, ZParams};
use crate::{Error, Rational, Result};

/// Reproducible simulation settings. Replica `r` draws from stream `r` of a
/// ChaCha20 generator keyed by `seed`.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub seed: u64,
    pub replicas: usize,
    pub burn_in: usize,
    pub sample_interval: usize,
    /// Recorded states per replica.
    pub samples: usize,
    pub n: usize,
    pub params: ZParams,
    pub variant: Variant,
}

impl SimConfig {
    pub fn new(n: usize, params: ZParams, seed: u64) -> Self {
        SimConfig {
            seed,
            replicas: 1,
            burn_in: 0,
            sample_interval: 1,
            samples: 1,
            n,
            params,
            variant: Variant::UpDown,
        }
    }

    pub fn total_steps(&self) -> usize {
        self.replicas * (self.burn_in + self.sample_interval * self.samples)
    }
}

pub fn replica_rng(seed: u64, replica: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(replica);
    rng
}

pub fn uniform_u128<R: RngCore + ?Sized>(rng: &mut R) -> u128 {
    (u128::from(rng.next_u64()) << 64) | u128::from(rng.next_u64())
}

/// Inverse-CDF draw from a finite distribution whose probabilities sum to 1.
pub fn sample_discrete<R: RngCore + ?Sized>(probs: &[Rational], rng: &mut R) -> usize {
    assert!(!probs.is_empty(), "cannot sample from an empty distribution");
    let u = Rational::new(BigInt::from(uniform_u128(rng)), BigInt::from(1u8) << 128);
    let mut cum = Rational::from_integer(0.into());
    for (i, p) in probs.iter().enumerate() {
        cum += p;
        if u < cum {
            return i;
        }
    }
    probs.len() - 1
}

fn pick<R: RngCore + ?Sized>(row: Vec<(Partition, Rational)>, rng: &mut R) -> Partition {
    let probs: Vec<Rational> = row.iter().map(|(_, v)| v.clone()).collect();
    let i = sample_discrete(&probs, rng);
    row.into_iter().nth(i).expect("index in range").0
}

/// Grows `∅ → Y_n` through the up kernels; the endpoint has law `M_n`.
pub fn sample_stationary<R: RngCore + ?Sized>(
    n: usize,
    params: &ZParams,
    rng: &mut R,
) -> Result<Partition> {
    Ok(sample_growth_prefixes(&[n], params, rng)?.pop().expect("one size"))
}

/// One growth path, read off at each requested size (ascending). Each output
/// has law `M_{size}`, and all of them come from the same path.
pub fn sample_growth_prefixes<R: RngCore + ?Sized>(
    sizes: &[usize],
    params: &ZParams,
    rng: &mut R,
) -> Result<Vec<Partition>> {
    params.require_admissible()?;
    debug_assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    let mut lam = Partition::empty();
    let mut out = Vec::with_capacity(sizes.len());
    for &target in sizes {
        while lam.size() < target {
            lam = pick(up_row(&lam, params)?, rng);
        }
        out.push(lam.clone());
    }
    Ok(out)
}

/// One transition of the chain: an up move then a down move (or the reverse).
pub fn step<R: RngCore + ?Sized>(
    lam: &Partition,
    params: &ZParams,
    variant: Variant,
    rng: &mut R,
) -> Result<Partition> {
    match variant {
        Variant::UpDown => {
            let nu = pick(up_row(lam, params)?, rng);
            Ok(pick(down_row(&nu), rng))
        }
        Variant::DownUp => {
            if lam.is_empty() {
                return Err(Error::Invalid("the down-up chain needs n >= 1".into()));
            }
            let mu = pick(down_row(lam), rng);
            Ok(pick(up_row(&mu, params)?, rng))
        }
    }
}

/// Recorded states of one replica, with their step index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplicaTrace {
    pub replica: usize,
    pub records: Vec<(usize, Partition)>,
}

/// Runs one replica: a stationary start, `burn_in` steps, then `samples`
/// records spaced `sample_interval` steps apart. `observe` sees every state
/// after the burn-in, including the first.
pub fn run_replica(
    cfg: &SimConfig,
    replica: usize,
    mut observe: impl FnMut(usize, &Partition),
) -> Result<()> {
    let mut rng = replica_rng(cfg.seed, replica as u64);
    let mut lam = sample_stationary(cfg.n, &cfg.params, &mut rng)?;
    for _ in 0..cfg.burn_in {
        lam = step(&lam, &cfg.params, cfg.variant, &mut rng)?;
    }
    let steps = cfg.sample_interval * cfg.samples;
    for t in 0..steps {
        observe(t, &lam);
        lam = step(&lam, &cfg.params, cfg.variant, &mut rng)?;
    }
    Ok(())
}

/// All replicas in parallel; output order is by replica index regardless of
/// scheduling.
pub fn simulate(cfg: &SimConfig) -> Result<Vec<ReplicaTrace>> {
    (0..cfg.replicas)
        .into_par_iter()
        .map(|r| {
            let mut records = Vec::with_capacity(cfg.samples);
            run_replica(cfg, r, |t, lam| {
                if t % cfg.sample_interval == 0 {
                    records.push((t, lam.clone()));
                }
            })?;
            Ok(ReplicaTrace { replica: r, records })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{box_distance, transition_row};
    use crate::zmeasure::LevelMeasure;
    use crate::{int, rat};
    use std::collections::HashMap;

    fn comp() -> ZParams {
        ZParams::classify(int(1), rat(6, 25))
    }

    #[test]
    fn discrete_sampler_respects_thresholds() {
        let probs = vec![rat(1, 4), rat(0, 1), rat(3, 4)];
        let mut rng = replica_rng(7, 0);
        let mut counts = [0usize; 3];
        for _ in 0..4000 {
            counts[sample_discrete(&probs, &mut rng)] += 1;
        }
        assert_eq!(counts[1], 0);
        assert!((counts[0] as f64 / 4000.0 - 0.25).abs() < 0.03);
    }

    #[test]
    fn level_one_sample_is_the_single_box() {
        let mut rng = replica_rng(1, 0);
        let one = Partition::new(vec![1]).unwrap();
        for _ in 0..10 {
            assert_eq!(sample_stationary(1, &comp(), &mut rng).unwrap(), one);
            assert_eq!(step(&one, &comp(), Variant::UpDown, &mut rng).unwrap(), one);
        }
    }

    #[test]
    fn seeded_runs_are_identical() {
        let mut cfg = SimConfig::new(10, comp(), 42);
        cfg.replicas = 3;
        cfg.samples = 20;
        cfg.sample_interval = 3;
        let a = simulate(&cfg).unwrap();
        let b = simulate(&cfg).unwrap();
        assert_eq!(a, b);
        assert_ne!(a[0].records, a[1].records);
    }

    #[test]
    fn steps_move_at_most_one_box() {
        let mut rng = replica_rng(3, 0);
        let mut lam = sample_stationary(30, &comp(), &mut rng).unwrap();
        for _ in 0..300 {
            let next = step(&lam, &comp(), Variant::UpDown, &mut rng).unwrap();
            assert!(matches!(box_distance(&lam, &next), 0 | 2));
            lam = next;
        }
    }

    #[test]
    fn small_level_histogram() {
        let pt = comp();
        let exact = LevelMeasure::new(4, &pt).unwrap();
        let mut rng = replica_rng(11, 0);
        let draws = 20_000;
        let mut counts: HashMap<Partition, usize> = HashMap::new();
        for _ in 0..draws {
            *counts.entry(sample_stationary(4, &pt, &mut rng).unwrap()).or_default() += 1;
        }
        let tv: f64 = exact
            .iter()
            .map(|(lam, w)| {
                let emp = counts.get(lam).copied().unwrap_or(0) as f64 / draws as f64;
                (emp - crate::to_f64(w)).abs()
            })
            .sum::<f64>()
            / 2.0;
        assert!(tv < 0.02, "tv = {tv}");
        // The one-step law from a fixed state.
        let start = Partition::new(vec![2, 1, 1]).unwrap();
        let row = transition_row(&start, &pt).unwrap();
        let mut hits: HashMap<Partition, usize> = HashMap::new();
        for _ in 0..draws {
            *hits.entry(step(&start, &pt, Variant::UpDown, &mut rng).unwrap()).or_default() += 1;
        }
        let tv: f64 = row
            .iter()
            .map(|(lam, w)| {
                let emp = hits.get(lam).copied().unwrap_or(0) as f64 / draws as f64;
                (emp - crate::to_f64(w)).abs()
            })
            .sum::<f64>()
            / 2.0;
        assert!(tv < 0.02, "tv = {tv}");
    }
}
