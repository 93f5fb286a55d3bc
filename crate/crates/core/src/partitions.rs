//! Young diagrams and their combinatorics.
//!
//! Levels `Y_n` are always listed in decreasing lexicographic order of the row
//! sequence; every matrix in the crate is indexed by that order.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::{Error, Rational, Result};

/// A Young diagram, stored as its weakly decreasing positive row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoxKind {
    Addable,
    Removable,
}

/// A box that can be added to or removed from a diagram. Rows and columns are
/// 1-based; `content = column - row`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BoxMove {
    pub kind: BoxKind,
    pub row: usize,
    pub column: usize,
    pub content: i64,
}

impl BoxMove {
    fn new(kind: BoxKind, row: usize, column: usize) -> Self {
        BoxMove {
            kind,
            row,
            column,
            content: column as i64 - row as i64,
        }
    }
}

impl Partition {
    /// Builds a partition from row lengths; trailing zeros are dropped.
    pub fn new(mut rows: Vec<usize>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!(
                "rows {rows:?} are not weakly decreasing"
            )));
        }
        if rows.contains(&0) {
            return Err(Error::Invalid(format!("rows {rows:?} contain an interior zero")));
        }
        Ok(Partition(rows))
    }

    pub(crate) fn from_sorted(rows: Vec<usize>) -> Self {
        debug_assert!(rows.windows(2).all(|w| w[0] >= w[1]) && !rows.contains(&0));
        Partition(rows)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row diagram `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// The one-column diagram `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The `k x l` rectangle (`k` rows, `l` columns).
    pub fn rectangle(k: usize, l: usize) -> Self {
        if l == 0 {
            Self::empty()
        } else {
            Partition(vec![l; k])
        }
    }

    pub fn rows(&self) -> &[usize] {
        &self.0
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero rows.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Row length, with rows past the end reading as 0. `i` is 1-based.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        let cols = (1..=width)
            .map(|j| self.0.iter().take_while(|&&r| r >= j).count())
            .collect();
        Partition(cols)
    }

    /// Whether the diagram of `self` contains the diagram of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    /// Boxes `(row, column)` in row-major order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &r)| (1..=r).map(move |j| (i + 1, j)))
    }

    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.boxes().map(|(i, j)| j as i64 - i as i64)
    }

    /// Addable boxes, ordered from the top row down (content decreasing).
    pub fn addable_boxes(&self) -> Vec<BoxMove> {
        let mut out = Vec::with_capacity(self.0.len() + 1);
        for i in 1..=self.0.len() + 1 {
            let r = self.row_len(i);
            if i == 1 || r < self.row_len(i - 1) {
                out.push(BoxMove::new(BoxKind::Addable, i, r + 1));
            }
        }
        out
    }

    /// Removable boxes, ordered from the top row down (content decreasing).
    pub fn removable_boxes(&self) -> Vec<BoxMove> {
        (1..=self.0.len())
            .filter(|&i| self.row_len(i) > self.row_len(i + 1))
            .map(|i| BoxMove::new(BoxKind::Removable, i, self.row_len(i)))
            .collect()
    }

    /// Applies an addable or removable box. The move must belong to `self`.
    pub fn apply(&self, mv: &BoxMove) -> Partition {
        let mut rows = self.0.clone();
        match mv.kind {
            BoxKind::Addable => {
                debug_assert_eq!(self.row_len(mv.row) + 1, mv.column);
                if mv.row > rows.len() {
                    rows.push(1);
                } else {
                    rows[mv.row - 1] += 1;
                }
            }
            BoxKind::Removable => {
                debug_assert_eq!(self.row_len(mv.row), mv.column);
                rows[mv.row - 1] -= 1;
                if rows[mv.row - 1] == 0 {
                    rows.pop();
                }
            }
        }
        Partition(rows)
    }

    /// Diagrams `λ•` obtained by adding one box, with the added box.
    pub fn up_neighbors(&self) -> Vec<(BoxMove, Partition)> {
        self.addable_boxes()
            .into_iter()
            .map(|b| (b, self.apply(&b)))
            .collect()
    }

    /// Diagrams `λ_•` obtained by removing one box, with the removed box.
    pub fn down_neighbors(&self) -> Vec<(BoxMove, Partition)> {
        self.removable_boxes()
            .into_iter()
            .map(|b| (b, self.apply(&b)))
            .collect()
    }

    pub fn frobenius(&self) -> FrobeniusCoords {
        let conj = self.conjugate();
        let d = self.0.iter().enumerate().take_while(|(i, &r)| r > *i).count();
        let doubled_a = (1..=d).map(|i| 2 * (self.0[i - 1] - i) + 1).collect();
        let doubled_b = (1..=d).map(|i| 2 * (conj.0[i - 1] - i) + 1).collect();
        FrobeniusCoords {
            doubled_a,
            doubled_b,
        }
    }

    /// Product of hook lengths.
    pub fn hook_product(&self) -> BigUint {
        let conj = self.conjugate();
        self.boxes()
            .map(|(i, j)| BigUint::from(self.0[i - 1] - j + conj.0[j - 1] - i + 1))
            .product()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (k, r) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `(3,1)`, `3,1`, `3 1`, `()`, `∅` or the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "∅" {
            return Ok(Partition::empty());
        }
        let inner = s.trim_start_matches('(').trim_end_matches(')');
        let rows = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad row length {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(rows)
    }
}

/// Modified Frobenius coordinates `(a_1..a_d | b_1..b_d)`. The half-integers
/// are stored doubled, so each stored value is an odd positive integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusCoords {
    pub doubled_a: Vec<usize>,
    pub doubled_b: Vec<usize>,
}

impl FrobeniusCoords {
    /// Number of diagonal boxes.
    pub fn depth(&self) -> usize {
        self.doubled_a.len()
    }

    pub fn a(&self) -> Vec<Rational> {
        self.doubled_a.iter().map(|&x| half(x)).collect()
    }

    pub fn b(&self) -> Vec<Rational> {
        self.doubled_b.iter().map(|&x| half(x)).collect()
    }
}

fn half(x: usize) -> Rational {
    Rational::new(BigInt::from(x), BigInt::from(2))
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_level(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            cur.push(first);
            rec(rest - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// The level `Y_n` with a reverse index.
#[derive(Debug, Clone)]
pub struct Level {
    pub n: usize,
    pub diagrams: Vec<Partition>,
    index: HashMap<Partition, usize>,
}

impl Level {
    pub fn new(n: usize) -> Self {
        let diagrams = enumerate_level(n);
        let index = diagrams
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        Level { n, diagrams, index }
    }

    pub fn len(&self) -> usize {
        self.diagrams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagrams.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// Dimensions computed by the branching rule `dim λ = Σ_{μ↗λ} dim μ`,
/// tabulated for every diagram up to a fixed size.
#[derive(Debug, Clone)]
pub struct DimTable {
    max_n: usize,
    dims: HashMap<Partition, BigUint>,
}

impl DimTable {
    pub fn build(max_n: usize) -> Self {
        let mut dims = HashMap::new();
        dims.insert(Partition::empty(), BigUint::one());
        for n in 1..=max_n {
            for lam in enumerate_level(n) {
                let d: BigUint = lam
                    .down_neighbors()
                    .iter()
                    .map(|(_, mu)| &dims[mu])
                    .sum();
                dims.insert(lam, d);
            }
        }
        DimTable { max_n, dims }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn get(&self, lam: &Partition) -> Option<&BigUint> {
        self.dims.get(lam)
    }
}

/// Largest size covered by the shared branching-rule table.
pub const DIM_TABLE_MAX: usize = 24;

fn shared_dims() -> &'static DimTable {
    static TABLE: OnceLock<DimTable> = OnceLock::new();
    TABLE.get_or_init(|| DimTable::build(DIM_TABLE_MAX))
}

/// Number of standard Young tableaux of shape `λ`.
///
/// Diagrams up to [`DIM_TABLE_MAX`] boxes come from the branching-rule table;
/// larger ones use the closed product formula in Frobenius coordinates.
pub fn dim(lam: &Partition) -> BigUint {
    match shared_dims().get(lam) {
        Some(d) => d.clone(),
        None => dim_frobenius(lam),
    }
}

/// Closed-form dimension:
/// `dim λ / n! = Π_{i<j}(a_i-a_j)(b_i-b_j) / (Π_{i,j}(a_i+b_j) Π (a_i-½)!(b_i-½)!)`.
pub fn dim_frobenius(lam: &Partition) -> BigUint {
    let fc = lam.frobenius();
    let a: Vec<i64> = fc.doubled_a.iter().map(|&x| x as i64).collect();
    let b: Vec<i64> = fc.doubled_b.iter().map(|&x| x as i64).collect();
    let d = a.len();
    // With doubled coordinates the powers of two collapse to a single 2^d.
    let mut num = factorial(lam.size()) * (BigInt::one() << d);
    let mut den = BigInt::one();
    for i in 0..d {
        for j in i + 1..d {
            num *= (a[i] - a[j]) * (b[i] - b[j]);
        }
        for j in 0..d {
            den *= a[i] + b[j];
        }
        den *= factorial(((a[i] - 1) / 2) as usize);
        den *= factorial(((b[i] - 1) / 2) as usize);
    }
    debug_assert!((&num % &den).is_zero());
    (num / den).to_biguint().expect("dimension is positive")
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Number of saturated chains `μ ↗ … ↗ λ`; zero when `μ ⊄ λ`.
pub fn skew_dim(mu: &Partition, lam: &Partition) -> BigUint {
    if !lam.contains(mu) {
        return BigUint::zero();
    }
    let mut frontier: HashMap<Partition, BigUint> = HashMap::new();
    frontier.insert(mu.clone(), BigUint::one());
    for _ in mu.size()..lam.size() {
        let mut next: HashMap<Partition, BigUint> = HashMap::new();
        for (nu, count) in &frontier {
            for (_, up) in nu.up_neighbors() {
                if lam.contains(&up) {
                    *next.entry(up).or_default() += count;
                }
            }
        }
        frontier = next;
    }
    frontier.remove(lam).unwrap_or_default()
}

/// Contents of addable boxes (`x`) and removable boxes (`y`), each ascending.
pub fn interlacing(lam: &Partition) -> (Vec<i64>, Vec<i64>) {
    let mut x: Vec<i64> = lam.addable_boxes().iter().map(|b| b.content).collect();
    let mut y: Vec<i64> = lam.removable_boxes().iter().map(|b| b.content).collect();
    x.sort_unstable();
    y.sort_unstable();
    (x, y)
}

/// For each addable box, the Plancherel growth ratio
/// `dim λ• / ((n+1) dim λ) = Π_j (x_i - y_j) / Π_{l≠i} (x_i - x_l)`,
/// computed from the interlacing contents alone.
pub fn growth_ratios(lam: &Partition) -> Vec<(BoxMove, Rational)> {
    let adds = lam.addable_boxes();
    let y: Vec<i64> = lam.removable_boxes().iter().map(|b| b.content).collect();
    adds.iter()
        .map(|b| {
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for &yj in &y {
                num *= b.content - yj;
            }
            for other in &adds {
                if other.content != b.content {
                    den *= b.content - other.content;
                }
            }
            (*b, Rational::new(num, den))
        })
        .collect()
}

/// For each removable box, the ratio `dim λ_• / dim λ`, equal to
/// `-(1/n) Π_i (y_j - x_i) / Π_{l≠j} (y_j - y_l)`.
pub fn removal_ratios(lam: &Partition) -> Vec<(BoxMove, Rational)> {
    let n = lam.size() as i64;
    let rems = lam.removable_boxes();
    let x: Vec<i64> = lam.addable_boxes().iter().map(|b| b.content).collect();
    rems.iter()
        .map(|b| {
            let mut num = BigInt::from(-1);
            let mut den = BigInt::from(n);
            for &xi in &x {
                num *= b.content - xi;
            }
            for other in &rems {
                if other.content != b.content {
                    den *= b.content - other.content;
                }
            }
            (*b, Rational::new(num, den))
        })
        .collect()
}

/// Number of partitions of `m` with no part equal to 1 (`p(m) - p(m-1)`).
pub fn partitions_without_ones(m: usize) -> usize {
    enumerate_level(m).iter().filter(|p| !p.rows().contains(&1)).count()
}

pub(crate) fn biguint_to_rational(x: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{int, rat};

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    /// Independent partition count via the `p(n, k)` recurrence.
    fn count_partitions(n: usize) -> usize {
        let mut t = vec![vec![0usize; n + 1]; n + 1];
        for k in 0..=n {
            t[0][k] = 1;
        }
        for m in 1..=n {
            for k in 1..=n {
                t[m][k] = t[m][k - 1] + if k <= m { t[m - k][k] } else { 0 };
            }
        }
        t[n][n]
    }

    /// Counts standard tableaux by trying every placement order of 1..n.
    fn brute_force_tableaux(lam: &Partition) -> usize {
        fn rec(rows: &mut Vec<usize>, shape: &[usize], placed: usize, total: usize) -> usize {
            if placed == total {
                return 1;
            }
            let mut count = 0;
            for i in 0..shape.len() {
                let above_ok = i == 0 || rows[i - 1] > rows[i];
                if rows[i] < shape[i] && above_ok {
                    rows[i] += 1;
                    count += rec(rows, shape, placed + 1, total);
                    rows[i] -= 1;
                }
            }
            count
        }
        rec(&mut vec![0; lam.length()], lam.rows(), 0, lam.size())
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 1]).to_string(), "(3,1)");
    }

    #[test]
    fn level_enumeration() {
        assert_eq!(enumerate_level(0), vec![Partition::empty()]);
        assert_eq!(enumerate_level(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(enumerate_level(8).len(), 22);
        for n in 0..=14 {
            let lvl = enumerate_level(n);
            assert_eq!(lvl.len(), count_partitions(n), "p({n})");
            assert!(lvl.windows(2).all(|w| w[0] > w[1]), "order at {n}");
            assert!(lvl.iter().all(|l| l.size() == n));
        }
    }

    #[test]
    fn frobenius_examples() {
        let f = p(&[3, 1]).frobenius();
        assert_eq!(f.a(), vec![rat(5, 2)]);
        assert_eq!(f.b(), vec![rat(3, 2)]);
        assert_eq!(Partition::empty().frobenius().depth(), 0);
        let f = p(&[2, 2]).frobenius();
        assert_eq!(f.a(), vec![rat(3, 2), rat(1, 2)]);
        assert_eq!(f.b(), vec![rat(3, 2), rat(1, 2)]);
    }

    #[test]
    fn frobenius_sums_to_size() {
        for n in 0..=10 {
            for lam in enumerate_level(n) {
                let f = lam.frobenius();
                let s: usize = f.doubled_a.iter().chain(&f.doubled_b).sum();
                assert_eq!(s, 2 * n);
                assert!(f.doubled_a.windows(2).all(|w| w[0] > w[1]));
                assert!(f.doubled_b.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn dim_examples() {
        assert_eq!(dim(&p(&[1])), BigUint::from(1u32));
        assert_eq!(dim(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(dim(&p(&[2, 2])), BigUint::from(2u32));
        for lam in [p(&[2, 1]), p(&[2, 2]), p(&[3, 2, 1]), p(&[4, 2])] {
            assert_eq!(dim(&lam), BigUint::from(brute_force_tableaux(&lam)));
        }
    }

    #[test]
    fn dim_routes_agree() {
        let table = DimTable::build(12);
        for n in 0..=12 {
            for lam in enumerate_level(n) {
                assert_eq!(table.get(&lam).unwrap(), &dim_frobenius(&lam), "{lam}");
                let hook = factorial(n).to_biguint().unwrap() / lam.hook_product();
                assert_eq!(dim_frobenius(&lam), hook, "{lam}");
            }
        }
    }

    #[test]
    fn dim_squares_sum_to_factorial() {
        for n in 0..=10 {
            let s: BigUint = enumerate_level(n).iter().map(|l| dim(l).pow(2)).sum();
            assert_eq!(BigInt::from(s), factorial(n));
        }
    }

    #[test]
    fn skew_dim_examples() {
        assert_eq!(skew_dim(&p(&[1]), &p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(skew_dim(&p(&[3, 1]), &p(&[3, 1])), BigUint::one());
        assert_eq!(skew_dim(&p(&[2]), &p(&[1, 1, 1])), BigUint::zero());
        for n in 0..=7 {
            for lam in enumerate_level(n) {
                assert_eq!(skew_dim(&Partition::empty(), &lam), dim(&lam));
            }
        }
    }

    #[test]
    fn skew_dim_branching() {
        for n in 1..=8 {
            for lam in enumerate_level(n) {
                for m in 0..=n {
                    for mu in enumerate_level(m) {
                        let rhs: BigUint = lam
                            .down_neighbors()
                            .iter()
                            .filter(|(_, low)| low.contains(&mu))
                            .map(|(_, low)| skew_dim(&mu, low))
                            .sum();
                        if m == n {
                            let expected = if mu == lam { 1u32 } else { 0 };
                            assert_eq!(skew_dim(&mu, &lam), BigUint::from(expected));
                        } else {
                            assert_eq!(skew_dim(&mu, &lam), rhs, "{mu} in {lam}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn interlacing_examples() {
        assert_eq!(interlacing(&p(&[2, 1])), (vec![-2, 0, 2], vec![-1, 1]));
        assert_eq!(interlacing(&Partition::empty()), (vec![0], vec![]));
        assert_eq!(interlacing(&p(&[3])), (vec![-1, 3], vec![2]));
    }

    #[test]
    fn kerov_identities() {
        for n in 0..=10 {
            for lam in enumerate_level(n) {
                let (x, y) = interlacing(&lam);
                assert_eq!(x.len(), y.len() + 1);
                for k in 0..y.len() {
                    assert!(x[k] < y[k] && y[k] < x[k + 1]);
                }
                let s1: i64 = x.iter().sum::<i64>() - y.iter().sum::<i64>();
                let s2: i64 =
                    x.iter().map(|v| v * v).sum::<i64>() - y.iter().map(|v| v * v).sum::<i64>();
                assert_eq!(s1, 0);
                assert_eq!(s2, 2 * n as i64);
            }
        }
    }

    #[test]
    fn local_ratios_match_dimensions() {
        for n in 0..=9 {
            for lam in enumerate_level(n) {
                let dl = biguint_to_rational(&dim(&lam));
                let ups = growth_ratios(&lam);
                let mut total = int(0);
                for (b, r) in &ups {
                    let up = lam.apply(b);
                    let expected = biguint_to_rational(&dim(&up)) / (&dl * int(n as i64 + 1));
                    assert_eq!(r, &expected);
                    total += r;
                }
                assert_eq!(total, int(1));
                if n > 0 {
                    let downs = removal_ratios(&lam);
                    let mut total = int(0);
                    for (b, r) in &downs {
                        let low = lam.apply(b);
                        assert_eq!(r, &(biguint_to_rational(&dim(&low)) / &dl));
                        total += r;
                    }
                    assert_eq!(total, int(1));
                }
            }
        }
    }

    #[test]
    fn large_dimensions_use_closed_form() {
        let lam = p(&[20, 10, 3, 1]);
        let hook = factorial(lam.size()).to_biguint().unwrap() / lam.hook_product();
        assert_eq!(dim(&lam), hook);
    }

    #[test]
    fn conjugation_and_boxes() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate().conjugate(), p(&[3, 1]));
        let c: Vec<i64> = p(&[2, 1]).contents().collect();
        assert_eq!(c, vec![0, 1, -1]);
        assert_eq!(partitions_without_ones(8), 7);
    }
}
