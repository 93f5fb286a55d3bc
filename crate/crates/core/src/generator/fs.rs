use num_traits::Zero;

use crate::partitions::{enumerate_level, growth_ratios, Partition};
use crate::symfunc::fs_eval;
use crate::zmeasure::{down_row, ZParams};
use crate::{format_rational, int, Rational, Verdict, Violation};

/// `D_{n+1,n} (FS_μ)_n = (n+1-m)/(n+1) · (FS_μ)_{n+1}` at every `ν ∈ Y_{n+1}`.
pub fn d_tilde_check(mu: &Partition, n: usize) -> Verdict {
    let m = mu.size() as i64;
    let factor = int(n as i64 + 1 - m) / int(n as i64 + 1);
    for nu in enumerate_level(n + 1) {
        let lhs: Rational = down_row(&nu)
            .into_iter()
            .map(|(low, p)| p * fs_eval(mu, &low))
            .sum();
        let rhs = &factor * fs_eval(mu, &nu);
        if lhs != rhs {
            return Err(Violation::new(
                "D FS_mu = (p1 - |mu|) FS_mu",
                format!(
                    "mu={mu}, nu={nu}: {} vs {}",
                    format_rational(&lhs),
                    format_rational(&rhs)
                ),
            ));
        }
    }
    Ok(())
}

/// `(d + n) U_{n,n+1} (FS_μ)_{n+1} = Σ_{μ•↗μ} bf · (FS_{μ•})_n + (n + d + m)(FS_μ)_n`
/// at every `λ ∈ Y_n`. The left side is computed without dividing by `d + n`,
/// so the identity is checked as a polynomial identity in `(e, d)`.
pub fn u_tilde_check(mu: &Partition, n: usize, params: &ZParams) -> Verdict {
    let m = mu.size() as i64;
    let shift = int(n as i64 + m) + params.d();
    let lowered: Vec<(Rational, Partition)> = mu
        .down_neighbors()
        .into_iter()
        .map(|(b, low)| (params.box_factor(b.content), low))
        .collect();
    for lam in enumerate_level(n) {
        let mut lhs = Rational::zero();
        for (b, r) in growth_ratios(&lam) {
            let up = lam.apply(&b);
            lhs += params.box_factor(b.content) * r * fs_eval(mu, &up);
        }
        let mut rhs = &shift * fs_eval(mu, &lam);
        for (bf, low) in &lowered {
            rhs += bf * fs_eval(low, &lam);
        }
        if lhs != rhs {
            return Err(Violation::new(
                "U FS_mu = sum bf FS_mu. + (p1 + d + |mu|) FS_mu",
                format!(
                    "mu={mu}, lambda={lam}, {params}: {} vs {}",
                    format_rational(&lhs),
                    format_rational(&rhs)
                ),
            ));
        }
    }
    Ok(())
}
