//! The up-down Markov chain on `Y_n`, exact stationarity and reversibility
//! checks, the embedding of diagrams into the Thoma simplex, seeded sampling,
//! and the Pascal-triangle toy chain.

mod embed;
pub mod pascal;
mod sampling;

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

pub use embed::{embed, EmbeddedPoint};
pub use sampling::{
    replica_rng, run_replica, sample_discrete, sample_growth_prefixes, sample_stationary, simulate,
    step, uniform_u128, ReplicaTrace, SimConfig,
};

use crate::partitions::{Level, Partition};
use crate::zmeasure::{down_row, up_row, LevelMeasure, ZParams};
use crate::{format_rational, Error, Rational, Result, Verdict, Violation};

/// Order of the two moves in one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    /// Add a box, then remove one (`T_n = p↑ p↓`).
    #[default]
    UpDown,
    /// Remove a box, then add one.
    DownUp,
}

/// One row `T_n(λ, ·)` computed from the corners of `λ`, sorted by diagram.
pub fn transition_row(lam: &Partition, params: &ZParams) -> Result<Vec<(Partition, Rational)>> {
    transition_row_variant(lam, params, Variant::UpDown)
}

pub fn transition_row_variant(
    lam: &Partition,
    params: &ZParams,
    variant: Variant,
) -> Result<Vec<(Partition, Rational)>> {
    let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
    match variant {
        Variant::UpDown => {
            for (nu, pu) in up_row(lam, params)? {
                for (target, pd) in down_row(&nu) {
                    *acc.entry(target).or_insert_with(Rational::zero) += &pu * pd;
                }
            }
        }
        Variant::DownUp => {
            if lam.is_empty() {
                return Err(Error::Invalid("the down-up chain needs n >= 1".into()));
            }
            for (mu, pd) in down_row(lam) {
                for (target, pu) in up_row(&mu, params)? {
                    *acc.entry(target).or_insert_with(Rational::zero) += &pd * pu;
                }
            }
        }
    }
    Ok(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
}

/// The chain at level `n`. Rows are evaluated lazily; [`UpDownChain::materialize`]
/// builds the full sparse matrix for small `n`.
#[derive(Debug, Clone)]
pub struct UpDownChain {
    pub n: usize,
    pub params: ZParams,
    pub variant: Variant,
}

impl UpDownChain {
    pub fn new(n: usize, params: ZParams) -> Self {
        UpDownChain {
            n,
            params,
            variant: Variant::UpDown,
        }
    }

    pub fn with_variant(mut self, variant: Variant) -> Self {
        self.variant = variant;
        self
    }

    pub fn row(&self, lam: &Partition) -> Result<Vec<(Partition, Rational)>> {
        debug_assert_eq!(lam.size(), self.n);
        transition_row_variant(lam, &self.params, self.variant)
    }

    pub fn materialize(&self) -> Result<ChainMatrix> {
        let level = Level::new(self.n);
        let rows = level
            .diagrams
            .par_iter()
            .map(|lam| {
                Ok(self
                    .row(lam)?
                    .into_iter()
                    .map(|(p, v)| (level.index_of(&p).expect("same level"), v))
                    .collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChainMatrix { level, rows })
    }
}

/// Sparse square matrix over one level.
#[derive(Debug, Clone)]
pub struct ChainMatrix {
    pub level: Level,
    pub rows: Vec<Vec<(usize, Rational)>>,
}

impl ChainMatrix {
    pub fn entry(&self, i: usize, j: usize) -> Rational {
        self.rows[i]
            .iter()
            .find(|(k, _)| *k == j)
            .map_or_else(Rational::zero, |(_, v)| v.clone())
    }

    pub fn check_stochastic(&self) -> Verdict {
        for (lam, row) in self.level.diagrams.iter().zip(&self.rows) {
            let s: Rational = row.iter().map(|(_, v)| v).sum();
            if row.iter().any(|(_, v)| v.is_negative()) || s != Rational::from_integer(1.into()) {
                return Err(Violation::new(
                    "T_n is stochastic",
                    format!("row {lam} sums to {}", format_rational(&s)),
                ));
            }
        }
        Ok(())
    }

    /// `M(λ) T(λ, λ̃) = M(λ̃) T(λ̃, λ)` for every pair, and `M T = M`.
    pub fn check_reversible(&self, measure: &LevelMeasure) -> Verdict {
        let w = &measure.weights;
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                let forward = &w[i] * v;
                let backward = &w[*j] * self.entry(*j, i);
                if forward != backward {
                    return Err(Violation::new(
                        "M_n(λ) T_n(λ,λ̃) is symmetric",
                        format!(
                            "{} -> {}: {} vs {}",
                            self.level.diagrams[i],
                            self.level.diagrams[*j],
                            format_rational(&forward),
                            format_rational(&backward)
                        ),
                    ));
                }
            }
        }
        let mut pushed = vec![Rational::zero(); self.level.len()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                pushed[*j] += &w[i] * v;
            }
        }
        for (k, (got, want)) in pushed.iter().zip(w).enumerate() {
            if got != want {
                return Err(Violation::new(
                    "M_n T_n = M_n",
                    format!(
                        "at {}: {} vs {}",
                        self.level.diagrams[k],
                        format_rational(got),
                        format_rational(want)
                    ),
                ));
            }
        }
        Ok(())
    }
}

/// Exact reversibility and stationarity of `M_n` for `T_n`.
pub fn reversibility_check(n: usize, params: &ZParams) -> Result<Verdict> {
    reversibility_check_variant(n, params, Variant::UpDown)
}

pub fn reversibility_check_variant(
    n: usize,
    params: &ZParams,
    variant: Variant,
) -> Result<Verdict> {
    let chain = UpDownChain::new(n, params.clone())
        .with_variant(variant)
        .materialize()?;
    let measure = LevelMeasure::new(n, params)?;
    Ok(chain.check_stochastic().and_then(|_| chain.check_reversible(&measure)))
}

/// Size of the symmetric difference of two diagrams, in boxes.
pub fn box_distance(a: &Partition, b: &Partition) -> usize {
    let len = a.length().max(b.length());
    (1..=len)
        .map(|i| a.row_len(i).abs_diff(b.row_len(i)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_level;
    use crate::{int, rat};

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn pts() -> Vec<ZParams> {
        vec![
            ZParams::classify(int(1), rat(6, 25)),
            ZParams::classify(int(0), int(1)),
            ZParams::classify(rat(11, 4), rat(15, 8)),
        ]
    }

    #[test]
    fn level_one_is_a_point() {
        for pt in pts() {
            assert_eq!(transition_row(&p(&[1]), &pt).unwrap(), vec![(p(&[1]), int(1))]);
        }
    }

    #[test]
    fn rows_sum_to_one_and_move_one_box() {
        for pt in pts() {
            for n in 1..=7 {
                for lam in enumerate_level(n) {
                    for variant in [Variant::UpDown, Variant::DownUp] {
                        let row = transition_row_variant(&lam, &pt, variant).unwrap();
                        let s: Rational = row.iter().map(|(_, v)| v).sum();
                        assert_eq!(s, int(1));
                        for (to, _) in &row {
                            assert!(matches!(box_distance(&lam, to), 0 | 2));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn row_matches_kernel_product() {
        use crate::zmeasure::{down_kernel, up_kernel};
        let pt = ZParams::classify(int(1), rat(6, 25));
        let n = 4;
        let up = up_kernel(n, &pt).unwrap();
        let down = down_kernel(n + 1).unwrap();
        let chain = UpDownChain::new(n, pt.clone()).materialize().unwrap();
        for (i, lam) in chain.level.diagrams.iter().enumerate() {
            let mut dense = vec![Rational::zero(); chain.level.len()];
            for (k, pu) in &up.rows[i] {
                for (j, pd) in &down.rows[*k] {
                    dense[*j] += pu * pd;
                }
            }
            for (j, v) in dense.iter().enumerate() {
                assert_eq!(&chain.entry(i, j), v, "{lam}");
            }
        }
    }

    #[test]
    fn reversible_and_stationary() {
        for pt in pts() {
            for n in 1..=6 {
                reversibility_check(n, &pt).unwrap().unwrap();
                reversibility_check_variant(n, &pt, Variant::DownUp)
                    .unwrap()
                    .unwrap();
            }
        }
    }

    #[test]
    fn perturbed_kernel_is_not_reversible() {
        let pt = ZParams::classify(int(1), rat(6, 25));
        let mut chain = UpDownChain::new(4, pt.clone()).materialize().unwrap();
        let measure = LevelMeasure::new(4, &pt).unwrap();
        // Move mass between two entries of one row: still stochastic.
        let row = &mut chain.rows[1];
        let delta = rat(1, 1000);
        row[0].1 += &delta;
        row[1].1 -= &delta;
        assert!(chain.check_stochastic().is_ok());
        assert!(chain.check_reversible(&measure).is_err());
    }

    #[test]
    fn box_distance_examples() {
        assert_eq!(box_distance(&p(&[3, 1]), &p(&[2, 2])), 2);
        assert_eq!(box_distance(&p(&[3, 1]), &p(&[3, 1])), 0);
        assert_eq!(box_distance(&p(&[4]), &p(&[1, 1, 1, 1])), 6);
    }
}
