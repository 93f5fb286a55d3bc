use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Sub};

use num_traits::{One, Zero};

use super::characters::{centralizer, CharacterTable};
use super::poly::{Monomial, PowerSumPoly};
use crate::partitions::Partition;
use crate::{int, Error, Rational, Result};

/// A homogeneous symmetric function of degree `m` in the Schur basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurVector {
    degree: usize,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SchurVector {
    pub fn zero(degree: usize) -> Self {
        SchurVector {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis vector `s_μ`.
    pub fn basis(mu: &Partition) -> Self {
        let mut v = Self::zero(mu.size());
        v.coeffs.insert(mu.clone(), Rational::one());
        v
    }

    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Partition, Rational)>,
    ) -> Result<Self> {
        let mut v = Self::zero(degree);
        for (p, c) in terms {
            if p.size() != degree {
                return Err(Error::SizeMismatch(format!(
                    "{p} does not have size {degree}"
                )));
            }
            v.add_term(p, c);
        }
        Ok(v)
    }

    pub(crate) fn add_term(&mut self, p: Partition, c: Rational) {
        debug_assert_eq!(p.size(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.degree);
        for (p, v) in &self.coeffs {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    /// Expansion in power sums.
    pub fn to_power_sums(&self) -> PowerSumPoly {
        let mut out = PowerSumPoly::zero();
        for (mu, c) in &self.coeffs {
            out = out + schur_to_p(mu).scale(c);
        }
        out
    }
}

impl Add for &SchurVector {
    type Output = SchurVector;
    fn add(self, rhs: &SchurVector) -> SchurVector {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding Schur vectors of different degrees");
        let mut out = self.clone();
        for (p, c) in &rhs.coeffs {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SchurVector {
    type Output = SchurVector;
    fn sub(self, rhs: &SchurVector) -> SchurVector {
        self + &rhs.scale(&-Rational::one())
    }
}

/// `s_μ = Σ_ρ χ^μ_ρ p_ρ / z_ρ`.
pub fn schur_to_p(mu: &Partition) -> PowerSumPoly {
    let m = mu.size();
    let table = CharacterTable::get(m);
    let row = table.row(table.index_of(mu).expect("μ is in its own level"));
    PowerSumPoly::from_terms(table.partitions.iter().zip(row).map(|(rho, &chi)| {
        (
            Monomial::from_indices(rho.rows().to_vec()),
            int(chi) / centralizer(rho),
        )
    }))
}

/// Inverse transition `p_ρ = Σ_λ χ^λ_ρ s_λ`, for homogeneous input.
pub fn p_to_schur(f: &PowerSumPoly) -> Result<SchurVector> {
    let degrees = f.degrees();
    match degrees.as_slice() {
        [] => Ok(SchurVector::zero(0)),
        [m] => Ok(p_to_schur_homogeneous(f, *m)),
        _ => Err(Error::NonHomogeneous(degrees)),
    }
}

/// Schur expansion of every homogeneous component.
pub fn p_to_schur_graded(f: &PowerSumPoly) -> BTreeMap<usize, SchurVector> {
    f.homogeneous_parts()
        .into_iter()
        .map(|(m, part)| (m, p_to_schur_homogeneous(&part, m)))
        .collect()
}

fn p_to_schur_homogeneous(f: &PowerSumPoly, m: usize) -> SchurVector {
    let table = CharacterTable::get(m);
    let mut out = SchurVector::zero(m);
    for (mono, c) in f.terms() {
        let rho = Partition::from_sorted(mono.indices().to_vec());
        let col = table.index_of(&rho).expect("monomial has the right degree");
        for (li, lam) in table.partitions.iter().enumerate() {
            let chi = table.row(li)[col];
            if chi != 0 {
                out.add_term(lam.clone(), c * int(chi));
            }
        }
    }
    out
}

/// Multiplication by `p_1`: `p_1 s_λ = Σ_{λ•↘λ} s_{λ•}`.
pub fn pieri_p1(v: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero(v.degree + 1);
    for (lam, c) in v.terms() {
        for (_, up) in lam.up_neighbors() {
            out.add_term(up, c.clone());
        }
    }
    out
}

/// `C'_k : s_μ ↦ Σ_{μ_•↗μ} c(μ/μ_•)^k s_{μ_•}`.
pub fn content_op(k: u32, v: &SchurVector) -> SchurVector {
    let mut out = SchurVector::zero(v.degree.saturating_sub(1));
    for (mu, c) in v.terms() {
        for (b, low) in mu.down_neighbors() {
            out.add_term(low, c * int(b.content.pow(k)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_level;
    use crate::rat;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn ps(s: &str) -> PowerSumPoly {
        s.parse().unwrap()
    }

    fn sv(terms: &[(&[usize], i64)]) -> SchurVector {
        let deg = terms[0].0.iter().sum();
        SchurVector::from_terms(deg, terms.iter().map(|(r, c)| (p(r), int(*c)))).unwrap()
    }

    #[test]
    fn schur_to_p_examples() {
        assert_eq!(schur_to_p(&p(&[1])), ps("p1"));
        assert_eq!(schur_to_p(&p(&[2])), ps("1/2*p1^2 + 1/2*p2"));
        assert_eq!(schur_to_p(&p(&[1, 1])), ps("1/2*p1^2 - 1/2*p2"));
        assert_eq!(schur_to_p(&Partition::empty()), PowerSumPoly::one());
    }

    #[test]
    fn p_to_schur_examples() {
        assert_eq!(p_to_schur(&ps("p2")).unwrap(), sv(&[(&[2], 1), (&[1, 1], -1)]));
        assert_eq!(p_to_schur(&ps("p1")).unwrap(), sv(&[(&[1], 1)]));
        assert_eq!(p_to_schur(&ps("p1^2")).unwrap(), sv(&[(&[2], 1), (&[1, 1], 1)]));
        assert!(matches!(
            p_to_schur(&ps("p1 + p2")),
            Err(Error::NonHomogeneous(_))
        ));
    }

    #[test]
    fn round_trip_up_to_degree_eight() {
        for m in 0..=8 {
            for mu in enumerate_level(m) {
                let back = p_to_schur(&schur_to_p(&mu)).unwrap();
                assert_eq!(back, SchurVector::basis(&mu), "{mu}");
            }
        }
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_p1(&SchurVector::basis(&Partition::empty())), sv(&[(&[1], 1)]));
        assert_eq!(
            pieri_p1(&sv(&[(&[1], 1)])),
            sv(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            pieri_p1(&sv(&[(&[2, 1], 1)])),
            sv(&[(&[3, 1], 1), (&[2, 2], 1), (&[2, 1, 1], 1)])
        );
    }

    #[test]
    fn pieri_is_multiplication_by_p1() {
        for m in 0..=6 {
            for mu in enumerate_level(m) {
                let lhs = pieri_p1(&SchurVector::basis(&mu)).to_power_sums();
                let rhs = &schur_to_p(&mu) * &ps("p1");
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn content_op_examples() {
        assert_eq!(content_op(1, &sv(&[(&[2], 1)])), sv(&[(&[1], 1)]));
        assert!(content_op(2, &sv(&[(&[1], 1)])).is_zero());
        assert_eq!(
            content_op(0, &sv(&[(&[2, 1], 1)])),
            sv(&[(&[2], 1), (&[1, 1], 1)])
        );
        assert_eq!(
            content_op(1, &sv(&[(&[2, 1], 1)])),
            sv(&[(&[2], -1), (&[1, 1], 1)])
        );
    }

    #[test]
    fn content_op_zero_is_adjoint_of_pieri() {
        for m in 0..8 {
            for mu in enumerate_level(m) {
                let up = pieri_p1(&SchurVector::basis(&mu));
                for lam in enumerate_level(m + 1) {
                    let down = content_op(0, &SchurVector::basis(&lam));
                    assert_eq!(up.coeff(&lam), down.coeff(&mu), "{mu} -> {lam}");
                }
            }
        }
    }

    #[test]
    fn schur_vector_arith() {
        let a = sv(&[(&[2], 1), (&[1, 1], 2)]);
        let b = sv(&[(&[2], -1)]);
        let s = &a + &b;
        assert_eq!(s, sv(&[(&[1, 1], 2)]));
        assert_eq!((&a - &a), SchurVector::zero(2));
        assert_eq!(a.scale(&rat(1, 2)).coeff(&p(&[1, 1])), int(1));
    }
}
