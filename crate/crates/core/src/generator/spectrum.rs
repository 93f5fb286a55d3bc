use std::collections::HashMap;

use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::linalg::{charpoly, poly_from_roots, zeros, DenseMatrix};
use crate::partitions::enumerate_level;
use crate::symfunc::{Monomial, Moments, QPoly};
use crate::zmeasure::ZParams;
use crate::{format_rational, int, Error, Rational, Result, Verdict, Violation};

use super::operators::apply_a_diff;

/// Monomials in `q_1, q_2, …` of weighted degree `≤ D` (`q_i` has weight
/// `i + 1`), by weighted degree and then reverse lexicographic order on
/// exponent vectors. Degree `m` monomials correspond to partitions of `m`
/// without parts equal to 1.
pub fn moment_basis(max_degree: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    for m in 0..=max_degree {
        let mut block: Vec<Monomial> = enumerate_level(m)
            .into_iter()
            .filter(|p| !p.rows().contains(&1))
            .map(|p| Monomial::from_indices(p.rows().iter().map(|&r| r - 1).collect()))
            .collect();
        block.sort_by_key(|mono| std::cmp::Reverse(exponents(mono, max_degree)));
        out.extend(block);
    }
    out
}

fn show(mono: &Monomial) -> QPoly {
    QPoly::monomial(mono.clone(), int(1))
}

fn exponents(mono: &Monomial, len: usize) -> Vec<usize> {
    (1..=len).map(|i| mono.exponent(i)).collect()
}

/// The matrix of `A` on `Λ°_{≤D}` in [`moment_basis`]. Column `j` holds the
/// coordinates of `A(basis[j])`.
#[derive(Debug, Clone)]
pub struct OperatorMatrix {
    pub degree: usize,
    pub basis: Vec<Monomial>,
    pub matrix: DenseMatrix,
}

impl OperatorMatrix {
    pub fn new(max_degree: usize, params: &ZParams) -> Result<Self> {
        let basis = moment_basis(max_degree);
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let columns = basis
            .par_iter()
            .map(|mono| {
                let image = apply_a_diff(&show(mono), params);
                let mut col = vec![Rational::zero(); basis.len()];
                for (m, c) in image.terms() {
                    let i = index.get(m).ok_or_else(|| {
                        Error::Invalid(format!(
                            "A({}) leaves the degree filtration",
                            show(mono)
                        ))
                    })?;
                    col[*i] = c.clone();
                }
                Ok(col)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut matrix = zeros(basis.len(), basis.len());
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                matrix[i][j] = v;
            }
        }
        Ok(OperatorMatrix {
            degree: max_degree,
            basis,
            matrix,
        })
    }

    pub fn weighted_degree(&self, i: usize) -> usize {
        self.basis[i].weighted_degree::<Moments>()
    }

    /// Every column of degree `m` is `-σ_m` on the diagonal plus terms of
    /// strictly lower degree.
    pub fn check_triangular(&self, params: &ZParams) -> Verdict {
        for j in 0..self.basis.len() {
            let m = self.weighted_degree(j);
            for i in 0..self.basis.len() {
                let v = &self.matrix[i][j];
                let ok = if i == j {
                    *v == -params.sigma(m)
                } else {
                    v.is_zero() || self.weighted_degree(i) < m
                };
                if !ok {
                    return Err(Violation::new(
                        "A lowers the filtration off the scalar diagonal",
                        format!(
                            "coefficient of {} in A({}) is {}",
                            show(&self.basis[i]),
                            show(&self.basis[j]),
                            format_rational(v)
                        ),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Eigenvalues of `A` on `Λ°_{≤D}` with multiplicities, ordered by degree.
/// The matrix is triangular, so they are read off its diagonal.
pub fn spectrum(max_degree: usize, params: &ZParams) -> Result<Vec<(Rational, usize)>> {
    params.require_admissible()?;
    if !params.d().is_positive() {
        // σ_m = σ_m' with m ≠ m' needs d = 1 - m - m' < 0.
        return Err(Error::DegenerateParams(format!(
            "d = {} is not positive, eigenvalues may collide",
            format_rational(params.d())
        )));
    }
    let op = OperatorMatrix::new(max_degree, params)?;
    op.check_triangular(params)
        .map_err(|v| Error::Invalid(v.to_string()))?;
    let mut out: Vec<(Rational, usize)> = Vec::new();
    for i in 0..op.basis.len() {
        let v = &op.matrix[i][i];
        match out.last_mut() {
            Some((last, count)) if last == v => *count += 1,
            _ => out.push((v.clone(), 1)),
        }
    }
    Ok(out)
}

/// Cross-check: the characteristic polynomial of the full matrix equals
/// `Π (t - λ)^{mult}` over [`spectrum`].
pub fn charpoly_check(max_degree: usize, params: &ZParams) -> Result<Verdict> {
    let spec = spectrum(max_degree, params)?;
    let op = OperatorMatrix::new(max_degree, params)?;
    let got = charpoly(&op.matrix);
    let want = poly_from_roots(&spec);
    if got == want {
        return Ok(Ok(()));
    }
    let k = got
        .iter()
        .zip(&want)
        .position(|(a, b)| a != b)
        .unwrap_or(got.len().min(want.len()));
    Ok(Err(Violation::new(
        "det(t - A) = product over the spectrum",
        format!(
            "D={max_degree}, coefficient of t^{k}: {} vs {}",
            got.get(k).map_or("-".into(), format_rational),
            want.get(k).map_or("-".into(), format_rational)
        ),
    )))
}
