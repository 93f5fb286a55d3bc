//! The algebra of symmetric functions `Λ`, realized in the power-sum basis,
//! its Schur basis, its realization as functions on Young diagrams, and its
//! quotient `Λ° = Λ/(p_1 - 1)` in moment coordinates.

mod characters;
mod poly;
mod schur;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use characters::{mn_character, CharacterTable};
pub use poly::{Monomial, Moments, Poly, PowerSumPoly, PowerSums, QPoly, Variables};
pub use schur::{content_op, p_to_schur, p_to_schur_graded, pieri_p1, schur_to_p, SchurVector};

use crate::partitions::{biguint_to_rational, dim, skew_dim, Partition};
use crate::Rational;

/// `p_k(λ) = Σ a_i^k + (-1)^{k-1} Σ b_i^k` over modified Frobenius coordinates.
pub fn power_sum_on_diagram(k: usize, lam: &Partition) -> Rational {
    power_sums_on_diagram(k, lam).pop().expect("k >= 1")
}

/// `[p_0(λ) (unused), p_1(λ), …, p_kmax(λ)]`.
pub fn power_sums_on_diagram(kmax: usize, lam: &Partition) -> Vec<Rational> {
    let fc = lam.frobenius();
    let mut out = vec![Rational::zero()];
    let mut pa: Vec<BigInt> = fc.doubled_a.iter().map(|&x| BigInt::from(x)).collect();
    let mut pb: Vec<BigInt> = fc.doubled_b.iter().map(|&x| BigInt::from(x)).collect();
    let a0 = pa.clone();
    let b0 = pb.clone();
    let mut two_k = BigInt::one();
    for k in 1..=kmax {
        if k > 1 {
            pa.iter_mut().zip(&a0).for_each(|(p, a)| *p *= a);
            pb.iter_mut().zip(&b0).for_each(|(p, b)| *p *= b);
        }
        two_k *= 2;
        let sa: BigInt = pa.iter().sum();
        let sb: BigInt = pb.iter().sum();
        let num = if k % 2 == 1 { sa + sb } else { sa - sb };
        out.push(Rational::new(num, two_k.clone()));
    }
    out
}

/// Value at `λ` of the function on Young diagrams corresponding to `f ∈ Λ`.
pub fn eval_on_diagram(f: &PowerSumPoly, lam: &Partition) -> Rational {
    let vals = power_sums_on_diagram(f.max_var(), lam);
    f.eval_with(&vals)
}

/// Falling factorial `n(n-1)…(n-m+1)`.
pub fn falling_factorial(n: usize, m: usize) -> BigInt {
    if m > n {
        return BigInt::zero();
    }
    (n - m + 1..=n).map(BigInt::from).product()
}

/// Frobenius-Schur function value `FS_μ(λ) = n^{↓m} dim(μ,λ) / dim λ`.
pub fn fs_eval(mu: &Partition, lam: &Partition) -> Rational {
    let (n, m) = (lam.size(), mu.size());
    if m > n || !lam.contains(mu) {
        return Rational::zero();
    }
    let sd = biguint_to_rational(&skew_dim(mu, lam));
    Rational::from_integer(falling_factorial(n, m)) * sd / biguint_to_rational(&dim(lam))
}

/// Reduction `Λ → Λ°`: `p_1 ↦ 1`, `p_k ↦ q_{k-1}`.
pub fn reduce_mod_p1(f: &PowerSumPoly) -> QPoly {
    f.map_monomials(|m| {
        let idx: Vec<usize> = m.indices().iter().filter(|&&i| i > 1).map(|&i| i - 1).collect();
        (Rational::one(), Monomial::from_indices(idx))
    })
}

/// The section `Λ° → Λ`, `q_i ↦ p_{i+1}`, landing in `R[p_2, p_3, …]`.
pub fn lift(f: &QPoly) -> PowerSumPoly {
    f.map_monomials(|m| {
        let idx: Vec<usize> = m.indices().iter().map(|&i| i + 1).collect();
        (Rational::one(), Monomial::from_indices(idx))
    })
}
