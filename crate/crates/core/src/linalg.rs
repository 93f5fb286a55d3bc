//! Small exact linear-algebra helpers over the rationals.

use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Dense square or rectangular rational matrix, row-major.
pub type DenseMatrix = Vec<Vec<Rational>>;

pub fn zeros(rows: usize, cols: usize) -> DenseMatrix {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> DenseMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn matmul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        debug_assert_eq!(row.len(), inner);
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

/// Solves `A x = b` exactly. Returns `None` when the system is inconsistent or
/// its columns are linearly dependent. Overdetermined consistent systems are
/// fine.
pub fn solve(a: &DenseMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: DenseMatrix = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    for col in 0..cols {
        let pr = (pivot_row..rows).find(|&r| !m[r][col].is_zero())?;
        m.swap(pivot_row, pr);
        let inv = Rational::one() / &m[pivot_row][col];
        for v in m[pivot_row].iter_mut() {
            *v *= &inv;
        }
        let pivot = m[pivot_row].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != pivot_row && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot) {
                    *v -= &f * p;
                }
            }
        }
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    Some((0..cols).map(|c| m[c][cols].clone()).collect())
}

/// Characteristic polynomial `det(tI - A)` by Faddeev-LeVerrier. Coefficients
/// are returned from the constant term up; the last entry is 1.
pub fn charpoly(a: &DenseMatrix) -> Vec<Rational> {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut m = zeros(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        let trace: Rational = (0..n).map(|i| am[i][i].clone()).sum();
        coeffs[n - k] = -trace / Rational::from_integer(k.into());
    }
    coeffs
}

/// Expands `Π (t - r)^{mult}` into coefficients from the constant term up.
pub fn poly_from_roots(roots: &[(Rational, usize)]) -> Vec<Rational> {
    let mut p = vec![Rational::one()];
    for (r, mult) in roots {
        for _ in 0..*mult {
            let mut next = vec![Rational::zero(); p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            p = next;
        }
    }
    p
}

/// Exact positive-semidefiniteness test for a symmetric matrix by symmetric
/// Gaussian elimination. On failure returns the offending pivot index and
/// value (a negative pivot, or a zero pivot with a nonzero remaining row).
pub fn check_psd(a: &DenseMatrix) -> Result<(), (usize, Rational)> {
    let n = a.len();
    let mut m = a.clone();
    for k in 0..n {
        let pivot = m[k][k].clone();
        if pivot.is_negative() {
            return Err((k, pivot));
        }
        if pivot.is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) {
                return Err((k, m[k][j].clone()));
            }
            continue;
        }
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] / &pivot;
            for j in k..n {
                let delta = &f * &m[k][j];
                m[i][j] -= delta;
            }
        }
    }
    Ok(())
}
