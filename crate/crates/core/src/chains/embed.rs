use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;
use crate::symfunc::{power_sums_on_diagram, QPoly};
use crate::{Error, Rational, Result};

/// A point `ω = (α, β)` of the Thoma simplex with `γ = 1 - Σα - Σβ`, together
/// with the moments `q_0 = 1, q_1, …, q_K` of its Thoma measure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedPoint {
    pub alpha: Vec<Rational>,
    pub beta: Vec<Rational>,
    pub gamma: Rational,
    moments: Vec<Rational>,
}

impl EmbeddedPoint {
    /// A point from finitely many `α, β` with `γ` filling the remainder.
    /// `q_k = Σ α_i^{k+1} + (-1)^k Σ β_i^{k+1}`.
    pub fn from_coordinates(alpha: Vec<Rational>, beta: Vec<Rational>, order: usize) -> Self {
        let gamma = Rational::one() - alpha.iter().sum::<Rational>() - beta.iter().sum::<Rational>();
        let mut moments = vec![Rational::one()];
        let mut pa = alpha.clone();
        let mut pb = beta.clone();
        for k in 1..=order {
            pa.iter_mut().zip(&alpha).for_each(|(p, a)| *p *= a);
            pb.iter_mut().zip(&beta).for_each(|(p, b)| *p *= b);
            let sa: Rational = pa.iter().sum();
            let sb: Rational = pb.iter().sum();
            moments.push(if k % 2 == 0 { sa + sb } else { sa - sb });
        }
        EmbeddedPoint {
            alpha,
            beta,
            gamma,
            moments,
        }
    }

    /// Moments up to `order`, `moments()[0] = q_0 = 1`.
    pub fn moments(&self) -> &[Rational] {
        &self.moments
    }

    pub fn q(&self, k: usize) -> &Rational {
        &self.moments[k]
    }

    pub fn order(&self) -> usize {
        self.moments.len() - 1
    }

    /// Value of a polynomial in the moment coordinates.
    pub fn eval(&self, f: &QPoly) -> Rational {
        assert!(
            f.max_var() <= self.order(),
            "point carries moments up to q_{} but f needs q_{}",
            self.order(),
            f.max_var()
        );
        f.eval_with(&self.moments)
    }
}

/// `ι_n(λ)`: `α_i = a_i / n`, `β_i = b_i / n` from the modified Frobenius
/// coordinates, with moments `q_k = p_{k+1}(λ) / n^{k+1}` up to `order`.
pub fn embed(lam: &Partition, order: usize) -> Result<EmbeddedPoint> {
    if lam.is_empty() {
        return Err(Error::EmptyDiagram);
    }
    let n = BigInt::from(lam.size());
    let fc = lam.frobenius();
    let two_n = Rational::from_integer(&n * 2);
    let scale = |v: &[usize]| -> Vec<Rational> {
        v.iter()
            .map(|&x| Rational::from_integer(BigInt::from(x)) / &two_n)
            .collect()
    };
    let alpha = scale(&fc.doubled_a);
    let beta = scale(&fc.doubled_b);
    let p = power_sums_on_diagram(order + 1, lam);
    let mut moments = vec![Rational::one()];
    let mut nk = n.clone();
    for k in 1..=order {
        nk *= &n;
        moments.push(&p[k + 1] / Rational::from_integer(nk.clone()));
    }
    Ok(EmbeddedPoint {
        alpha,
        beta,
        gamma: Rational::zero(),
        moments,
    })
}
