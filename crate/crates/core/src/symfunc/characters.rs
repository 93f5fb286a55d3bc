//! Irreducible characters of the symmetric groups via the Murnaghan-Nakayama
//! rule, with one lazily built table per degree.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;

use crate::partitions::{enumerate_level, factorial, Partition};
use crate::{Error, Rational, Result};

/// Full character table of `S_m`, rows and columns in level order.
#[derive(Debug)]
pub struct CharacterTable {
    pub degree: usize,
    pub partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    /// `values[λ][ρ] = χ^λ_ρ`.
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    fn build(m: usize) -> Self {
        let partitions = enumerate_level(m);
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let mut memo = HashMap::new();
        let values = partitions
            .iter()
            .map(|lam| {
                partitions
                    .iter()
                    .map(|rho| mn_rec(lam.rows(), rho.rows(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            degree: m,
            partitions,
            index,
            values,
        }
    }

    /// Shared table for `S_m`, built on first use.
    pub fn get(m: usize) -> Arc<CharacterTable> {
        static TABLES: OnceLock<RwLock<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
        let tables = TABLES.get_or_init(Default::default);
        if let Some(t) = tables.read().expect("character cache poisoned").get(&m) {
            return Arc::clone(t);
        }
        let mut w = tables.write().expect("character cache poisoned");
        Arc::clone(w.entry(m).or_insert_with(|| Arc::new(CharacterTable::build(m))))
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn value(&self, lam: &Partition, rho: &Partition) -> Option<i64> {
        Some(self.values[self.index_of(lam)?][self.index_of(rho)?])
    }

    pub fn row(&self, lam_index: usize) -> &[i64] {
        &self.values[lam_index]
    }
}

/// `χ^λ_ρ`, the irreducible character `λ` on the conjugacy class of cycle type `ρ`.
pub fn mn_character(lam: &Partition, rho: &Partition) -> Result<i64> {
    if lam.size() != rho.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lam}| = {} but |{rho}| = {}",
            lam.size(),
            rho.size()
        )));
    }
    Ok(CharacterTable::get(lam.size())
        .value(lam, rho)
        .expect("both partitions belong to the level"))
}

type MnKey = (Vec<usize>, Vec<usize>);

/// Strips a border strip of length `rho[0]` in every possible way, working on
/// beta-numbers `β_i = λ_i + ℓ - i`.
fn mn_rec(lam: &[usize], rho: &[usize], memo: &mut HashMap<MnKey, i64>) -> i64 {
    if rho.is_empty() {
        return if lam.is_empty() { 1 } else { 0 };
    }
    let key = (lam.to_vec(), rho.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0];
    let len = lam.len();
    let beta: Vec<usize> = lam.iter().enumerate().map(|(i, &l)| l + len - 1 - i).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let target = b - r;
        if beta.contains(&target) {
            continue;
        }
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let mut new_rows: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (len - 1 - k))
            .collect();
        while new_rows.last() == Some(&0) {
            new_rows.pop();
        }
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&new_rows, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// Centralizer order `z_ρ = Π i^{m_i} m_i!`.
pub(crate) fn centralizer(rho: &Partition) -> Rational {
    let mut z = BigInt::from(1);
    let rows = rho.rows();
    let mut k = 0;
    while k < rows.len() {
        let i = rows[k];
        let m = rows[k..].iter().take_while(|&&j| j == i).count();
        z *= BigInt::from(i).pow(m as u32) * factorial(m);
        k += m;
    }
    Rational::from_integer(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::dim;
    use crate::{int, rat};
    use num_traits::Zero;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        for rho in enumerate_level(5) {
            assert_eq!(mn_character(&p(&[5]), &rho).unwrap(), 1);
        }
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn identity_class_gives_dimension() {
        for m in 0..=8 {
            for lam in enumerate_level(m) {
                let chi = mn_character(&lam, &Partition::column(m)).unwrap();
                assert_eq!(BigInt::from(chi), BigInt::from(dim(&lam)));
            }
        }
    }

    #[test]
    fn sign_character() {
        for m in 1..=8 {
            for rho in enumerate_level(m) {
                let sign = if (m - rho.length()) % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&Partition::column(m), &rho).unwrap(), sign);
            }
        }
    }

    #[test]
    fn column_orthogonality() {
        for m in 0..=8 {
            let t = CharacterTable::get(m);
            let classes = enumerate_level(m);
            let z: Vec<Rational> = classes.iter().map(centralizer).collect();
            for (i, _) in t.partitions.iter().enumerate() {
                for (j, _) in t.partitions.iter().enumerate() {
                    let mut s = Rational::zero();
                    for (k, zk) in z.iter().enumerate() {
                        s += int(t.row(i)[k] * t.row(j)[k]) / zk;
                    }
                    assert_eq!(s, if i == j { int(1) } else { int(0) });
                }
            }
        }
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer(&p(&[2, 1, 1])), int(4));
        assert_eq!(centralizer(&p(&[1, 1, 1])), int(6));
        // Class sizes n!/z_ρ sum to n!.
        let total: Rational = enumerate_level(6)
            .iter()
            .map(|r| int(720) / centralizer(r))
            .sum();
        assert_eq!(total, int(720));
        assert_eq!(int(1) / centralizer(&p(&[3])), rat(1, 3));
    }
}
