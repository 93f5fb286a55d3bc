use std::collections::HashMap;

use num_traits::Zero;

use crate::linalg::{matmul, zeros, DenseMatrix};
use crate::partitions::{enumerate_level, Partition};
use crate::zmeasure::ZParams;
use crate::{format_rational, int, Rational, Verdict, Violation};

/// `E, F, H` acting on `span{δ_λ : |λ| ≤ N}`. Column `λ` of a matrix holds
/// the coefficients of `X δ_λ`; `E` applied to the top level is cut off.
#[derive(Debug, Clone)]
pub struct Sl2Truncation {
    pub max_size: usize,
    pub basis: Vec<Partition>,
    index: HashMap<Partition, usize>,
    pub e: DenseMatrix,
    pub f: DenseMatrix,
    pub h: DenseMatrix,
}

impl Sl2Truncation {
    pub fn new(max_size: usize, params: &ZParams) -> Self {
        let basis: Vec<Partition> = (0..=max_size).flat_map(enumerate_level).collect();
        let index: HashMap<Partition, usize> =
            basis.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let dim = basis.len();
        let mut e = zeros(dim, dim);
        let mut f = zeros(dim, dim);
        let mut h = zeros(dim, dim);
        for (col, lam) in basis.iter().enumerate() {
            h[col][col] = params.d() + int(2 * lam.size() as i64);
            for (_, low) in lam.down_neighbors() {
                f[index[&low]][col] = int(-1);
            }
            if lam.size() < max_size {
                for (b, up) in lam.up_neighbors() {
                    e[index[&up]][col] = params.box_factor(b.content);
                }
            }
        }
        Sl2Truncation {
            max_size,
            basis,
            index,
            e,
            f,
            h,
        }
    }

    pub fn index_of(&self, lam: &Partition) -> Option<usize> {
        self.index.get(lam).copied()
    }

    /// `[E,F] = H` on columns with `|λ| ≤ N-1`, `[H,E] = 2E`, `[H,F] = -2F`.
    pub fn commutator_check(&self) -> Verdict {
        let ef = commutator(&self.e, &self.f);
        let he = commutator(&self.h, &self.e);
        let hf = commutator(&self.h, &self.f);
        let two_e = scale(&self.e, &int(2));
        let minus_two_f = scale(&self.f, &int(-2));
        let checks = [
            ("[E,F] = H", &ef, &self.h, self.max_size),
            ("[H,E] = 2E", &he, &two_e, self.max_size + 1),
            ("[H,F] = -2F", &hf, &minus_two_f, self.max_size + 1),
        ];
        for (name, lhs, rhs, size_bound) in checks {
            for (c, lam) in self.basis.iter().enumerate() {
                if lam.size() >= size_bound {
                    continue;
                }
                for (r, row) in lhs.iter().enumerate() {
                    let want = &rhs[r][c];
                    if &row[c] != want {
                        return Err(Violation::new(
                            name,
                            format!(
                                "N={}, entry ({}, {}): {} vs {}",
                                self.max_size,
                                self.basis[r],
                                lam,
                                format_rational(&row[c]),
                                format_rational(want)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

fn scale(a: &DenseMatrix, c: &Rational) -> DenseMatrix {
    a.iter().map(|row| row.iter().map(|v| v * c).collect()).collect()
}

fn commutator(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let ab = matmul(a, b);
    let ba = matmul(b, a);
    ab.into_iter()
        .zip(ba)
        .map(|(x, y)| x.into_iter().zip(y).map(|(u, v)| u - v).collect())
        .collect()
}

/// At `z = k`, `z' = -l` the span of `δ_λ` with `λ` inside the `k × l`
/// rectangle is `E`-invariant: every escaping coefficient vanishes.
pub fn rectangle_invariance_check(k: usize, l: usize) -> Verdict {
    let params = ZParams::from_real_pair(&int(k as i64), &int(-(l as i64)));
    let rect = Partition::rectangle(k, l);
    for n in 0..=k * l {
        for lam in enumerate_level(n).into_iter().filter(|p| rect.contains(p)) {
            for (b, up) in lam.up_neighbors() {
                if rect.contains(&up) {
                    continue;
                }
                let coeff = params.box_factor(b.content);
                if !coeff.is_zero() {
                    return Err(Violation::new(
                        "V_{k,l} is E-invariant at z=k, z'=-l",
                        format!(
                            "k={k}, l={l}: E delta_{lam} has coefficient {} on {up}",
                            format_rational(&coeff)
                        ),
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn commutators_on_small_truncations() {
        for pt in [
            ZParams::classify(int(0), int(1)),
            ZParams::classify(int(1), rat(6, 25)),
            ZParams::classify(rat(-3, 2), int(-5)),
        ] {
            for n in 1..=4 {
                Sl2Truncation::new(n, &pt).commutator_check().unwrap();
            }
        }
    }

    #[test]
    fn h_diagonal() {
        let pt = ZParams::classify(int(0), int(1));
        let t = Sl2Truncation::new(3, &pt);
        let i = t.index_of(&Partition::new(vec![2, 1]).unwrap()).unwrap();
        assert_eq!(t.h[i][i], pt.d() + int(6));
    }

    #[test]
    fn broken_e_fails() {
        let pt = ZParams::classify(int(1), rat(6, 25));
        let mut t = Sl2Truncation::new(3, &pt);
        let col = t.index_of(&Partition::new(vec![1]).unwrap()).unwrap();
        let row = t.index_of(&Partition::new(vec![2]).unwrap()).unwrap();
        t.e[row][col] += int(1);
        assert!(t.commutator_check().is_err());
    }

    #[test]
    fn rectangles() {
        for (k, l) in [(1, 1), (2, 3), (3, 2), (2, 2)] {
            rectangle_invariance_check(k, l).unwrap();
        }
        // The single box: both escape boxes carry a vanishing factor.
        let pt = ZParams::from_real_pair(&int(1), &int(-1));
        assert!(pt.box_factor(1).is_zero());
        assert!(pt.box_factor(-1).is_zero());
    }
}
