use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::chains::{embed, transition_row};
use crate::partitions::{enumerate_level, Partition};
use crate::symfunc::{fs_eval, QPoly};
use crate::zmeasure::ZParams;
use crate::{format_rational, int, Error, Rational, Result, Verdict, Violation};

use super::operators::apply_a_diff;

fn moments_needed(f: &QPoly, af: &QPoly) -> usize {
    f.max_var().max(af.max_var()).max(1)
}

/// `(n²(T_n - 1) f)(λ)` for `f` read through the embedding `ι_n`.
fn scaled_chain_action(f: &QPoly, lam: &Partition, params: &ZParams, order: usize) -> Result<Rational> {
    let n = int(lam.size() as i64);
    let here = embed(lam, order)?.eval(f);
    let mut moved = Rational::zero();
    for (to, p) in transition_row(lam, params)? {
        moved += p * embed(&to, order)?.eval(f);
    }
    Ok(&n * &n * (moved - here))
}

/// `max_λ |n²(T_n - 1) f(ι_n λ) - (Af)(ι_n λ)|` over `eval_set ⊂ Y_n`.
pub fn convergence_residual(
    f: &QPoly,
    n: usize,
    params: &ZParams,
    eval_set: &[Partition],
) -> Result<Rational> {
    params.require_admissible()?;
    if n == 0 {
        return Err(Error::Invalid("the embedding needs n >= 1".into()));
    }
    if (params.d() + int(n as i64)).is_zero() {
        return Err(Error::DegenerateParams("d + n = 0".into()));
    }
    if let Some(bad) = eval_set.iter().find(|l| l.size() != n) {
        return Err(Error::SizeMismatch(format!("{bad} is not in Y_{n}")));
    }
    let af = apply_a_diff(f, params);
    let order = moments_needed(f, &af);
    let residuals = eval_set
        .par_iter()
        .map(|lam| {
            let chain = scaled_chain_action(f, lam, params, order)?;
            Ok((chain - embed(lam, order)?.eval(&af)).abs())
        })
        .collect::<Result<Vec<Rational>>>()?;
    Ok(residuals.into_iter().max().unwrap_or_else(Rational::zero))
}

/// The exact finite-level action on Frobenius-Schur functions:
///
/// ```text
/// (T_n - 1) FS_μ = -σ_m / ((n+1)(d+n)) FS_μ
///                  + (n+1-m) / ((n+1)(d+n)) Σ_{μ•↗μ} bf(c) FS_{μ•}
/// ```
///
/// at every `λ ∈ Y_n`.
pub fn fs_chain_check(mu: &Partition, n: usize, params: &ZParams) -> Result<Verdict> {
    let m = mu.size() as i64;
    let denom = int(n as i64 + 1) * (params.d() + int(n as i64));
    if denom.is_zero() {
        return Err(Error::DegenerateParams("d + n = 0".into()));
    }
    let diag = -params.sigma(mu.size()) / &denom;
    let off = int(n as i64 + 1 - m) / &denom;
    let lowered: Vec<(Rational, Partition)> = mu
        .down_neighbors()
        .into_iter()
        .map(|(b, low)| (params.box_factor(b.content), low))
        .collect();
    for lam in enumerate_level(n) {
        let here = fs_eval(mu, &lam);
        let mut lhs = -here.clone();
        for (to, p) in transition_row(&lam, params)? {
            lhs += p * fs_eval(mu, &to);
        }
        let mut rhs = &diag * &here;
        for (bf, low) in &lowered {
            rhs += &off * bf * fs_eval(low, &lam);
        }
        if lhs != rhs {
            return Ok(Err(Violation::new(
                "(T_n - 1) FS_mu on the Frobenius-Schur basis",
                format!(
                    "mu={mu}, lambda={lam}, {params}: {} vs {}",
                    format_rational(&lhs),
                    format_rational(&rhs)
                ),
            )));
        }
    }
    Ok(Ok(()))
}

/// `‖(s - A_n) f‖ ≥ s ‖f‖` in the sup norm over `Y_n`, where
/// `A_n = n²(T_n - 1)` and `f` is read through `ι_n`.
pub fn dissipativity_check(f: &QPoly, n: usize, params: &ZParams, s: &Rational) -> Result<Verdict> {
    if n == 0 {
        return Err(Error::Invalid("the embedding needs n >= 1".into()));
    }
    let order = f.max_var().max(1);
    let level = enumerate_level(n);
    let pairs = level
        .par_iter()
        .map(|lam| {
            let value = embed(lam, order)?.eval(f);
            let chain = scaled_chain_action(f, lam, params, order)?;
            Ok((value.abs(), (s * &value - chain).abs()))
        })
        .collect::<Result<Vec<(Rational, Rational)>>>()?;
    let norm_f = pairs.iter().map(|(a, _)| a).max().cloned().unwrap_or_default();
    let norm_g = pairs.iter().map(|(_, b)| b).max().cloned().unwrap_or_default();
    let bound = s * &norm_f;
    if norm_g >= bound {
        Ok(Ok(()))
    } else {
        Ok(Err(Violation::new(
            "||(s - A_n) f|| >= s ||f||",
            format!(
                "f={f}, n={n}, s={}: {} < {}",
                format_rational(s),
                format_rational(&norm_g),
                format_rational(&bound)
            ),
        )))
    }
}
