//! z-measures on the levels `Y_n`, the down and up transition kernels, and the
//! expectation functional of the boundary measure on `Λ°`.
//!
//! Parameters are carried as `e = z + z'` and `d = zz'`. Every formula only
//! needs these two numbers, since `(z + c)(z' + c) = c² + ec + d`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::partitions::{
    biguint_to_rational, dim, factorial, growth_ratios, removal_ratios, Level, Partition,
};
use crate::symfunc::{lift, p_to_schur_graded, PowerSumPoly, QPoly};
use crate::{format_rational, int, parse_rational, Error, Rational, Result, Verdict, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    /// `z, z'` non-real and conjugate.
    Principal,
    /// `z, z'` real and inside the same open interval `(N, N+1)`.
    Complementary { interval: i64 },
    NonAdmissible,
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Series::Principal => write!(f, "principal"),
            Series::Complementary { interval } => write!(f, "complementary (N={interval})"),
            Series::NonAdmissible => write!(f, "non-admissible"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZParams {
    e: Rational,
    d: Rational,
    series: Series,
}

impl ZParams {
    /// Tags `(e, d)` with its series using sign tests only.
    pub fn classify(e: Rational, d: Rational) -> Self {
        let series = series_of(&e, &d);
        ZParams { e, d, series }
    }

    /// Like [`ZParams::classify`] but rejects non-admissible points.
    pub fn admissible(e: Rational, d: Rational) -> Result<Self> {
        let p = Self::classify(e, d);
        p.require_admissible()?;
        Ok(p)
    }

    /// Parameters from a real pair `z, z'`.
    pub fn from_real_pair(z: &Rational, zp: &Rational) -> Self {
        Self::classify(z + zp, z * zp)
    }

    pub fn e(&self) -> &Rational {
        &self.e
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn is_admissible(&self) -> bool {
        self.series != Series::NonAdmissible
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NonAdmissible {
                e: format_rational(&self.e),
                d: format_rational(&self.d),
            })
        }
    }

    /// `(z + c)(z' + c) = c² + ec + d`.
    pub fn box_factor(&self, c: i64) -> Rational {
        let c = int(c);
        &c * &c + &self.e * &c + &self.d
    }

    /// `(zz')_n = d(d+1)…(d+n-1)`.
    pub fn rising_d(&self, n: usize) -> Rational {
        (0..n).map(|j| &self.d + int(j as i64)).product()
    }

    /// `(z)_λ (z')_λ`, the product of box factors over the boxes of `λ`.
    pub fn diagram_factor(&self, lam: &Partition) -> Rational {
        lam.contents().map(|c| self.box_factor(c)).product()
    }

    /// `σ_m = m(m - 1 + d)`.
    pub fn sigma(&self, m: usize) -> Rational {
        let m = int(m as i64);
        &m * (&m - int(1) + &self.d)
    }

    fn nonzero_rising(&self, n: usize) -> Result<Rational> {
        let r = self.rising_d(n);
        if r.is_zero() {
            return Err(Error::DegenerateParams(format!(
                "(d)_{n} = 0 at d = {}",
                format_rational(&self.d)
            )));
        }
        Ok(r)
    }
}

impl fmt::Display for ZParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e={},d={}",
            format_rational(&self.e),
            format_rational(&self.d)
        )
    }
}

/// Parses `e=NUM/DEN,d=NUM/DEN` (either order, whitespace allowed).
impl FromStr for ZParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut e = None;
        let mut d = None;
        for part in s.split(',') {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            let v = parse_rational(v)?;
            match k.trim() {
                "e" => e = Some(v),
                "d" => d = Some(v),
                other => return Err(Error::Parse(format!("unknown parameter {other:?}"))),
            }
        }
        match (e, d) {
            (Some(e), Some(d)) => Ok(ZParams::classify(e, d)),
            _ => Err(Error::Parse(format!("need both e and d in {s:?}"))),
        }
    }
}

fn series_of(e: &Rational, d: &Rational) -> Series {
    let disc = e * e - int(4) * d;
    if disc.is_negative() {
        return Series::Principal;
    }
    // Both real roots lie in (N, N+1) iff the vertex e/2 does and the
    // quadratic x² - ex + d is positive at both endpoints.
    let half = e / int(2);
    if half.is_integer() {
        return Series::NonAdmissible;
    }
    let n = half.floor().to_integer();
    let q = |x: &BigInt| {
        let x = Rational::from_integer(x.clone());
        &x * &x - e * &x + d
    };
    let n1 = &n + BigInt::one();
    if q(&n).is_positive() && q(&n1).is_positive() {
        let interval = i64::try_from(&n).unwrap_or(if n.is_negative() { i64::MIN } else { i64::MAX });
        Series::Complementary { interval }
    } else {
        Series::NonAdmissible
    }
}

/// Free-function form of [`ZParams::classify`].
pub fn classify(e: Rational, d: Rational) -> ZParams {
    ZParams::classify(e, d)
}

/// `M_n(λ) = (z)_λ (z')_λ (dim λ)² / ((zz')_n n!)`.
pub fn weight(lam: &Partition, params: &ZParams) -> Result<Rational> {
    let n = lam.size();
    let denom = params.nonzero_rising(n)? * Rational::from_integer(factorial(n));
    let d = biguint_to_rational(&dim(lam));
    Ok(params.diagram_factor(lam) * &d * &d / denom)
}

/// The z-measure on one level, in level order.
#[derive(Debug, Clone)]
pub struct LevelMeasure {
    pub level: Level,
    pub weights: Vec<Rational>,
}

impl LevelMeasure {
    /// Requires only `(d)_n ≠ 0`, so degenerate integer parameters are allowed
    /// (some weights then vanish or turn negative).
    pub fn new(n: usize, params: &ZParams) -> Result<Self> {
        params.nonzero_rising(n)?;
        let level = Level::new(n);
        let weights = level
            .diagrams
            .iter()
            .map(|lam| weight(lam, params))
            .collect::<Result<_>>()?;
        Ok(LevelMeasure { level, weights })
    }

    pub fn n(&self) -> usize {
        self.level.n
    }

    pub fn get(&self, lam: &Partition) -> Option<&Rational> {
        self.level.index_of(lam).map(|i| &self.weights[i])
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.level.diagrams.iter().zip(&self.weights)
    }
}

/// A sparse row-stochastic matrix between two levels, rows and columns in
/// level order.
#[derive(Debug, Clone)]
pub struct TransitionKernel {
    pub source: Level,
    pub target: Level,
    pub rows: Vec<Vec<(usize, Rational)>>,
}

impl TransitionKernel {
    fn from_local(
        source: Level,
        target: Level,
        row: impl Fn(&Partition) -> Vec<(Partition, Rational)>,
    ) -> Self {
        let rows = source
            .diagrams
            .iter()
            .map(|lam| {
                row(lam)
                    .into_iter()
                    .map(|(p, v)| (target.index_of(&p).expect("neighbour lies in target"), v))
                    .collect()
            })
            .collect();
        TransitionKernel {
            source,
            target,
            rows,
        }
    }

    pub fn entry(&self, from: &Partition, to: &Partition) -> Rational {
        let (Some(i), Some(j)) = (self.source.index_of(from), self.target.index_of(to)) else {
            return Rational::zero();
        };
        self.rows[i]
            .iter()
            .find(|(k, _)| *k == j)
            .map_or_else(Rational::zero, |(_, v)| v.clone())
    }

    /// Row vector times kernel.
    pub fn push_forward(&self, mass: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.target.len()];
        for (row, m) in self.rows.iter().zip(mass) {
            for (j, v) in row {
                out[*j] += m * v;
            }
        }
        out
    }

    /// Every row sums to exactly 1 and has nonnegative entries.
    pub fn check_stochastic(&self) -> Verdict {
        for (lam, row) in self.source.diagrams.iter().zip(&self.rows) {
            if let Some((j, v)) = row.iter().find(|(_, v)| v.is_negative()) {
                return Err(Violation::new(
                    "kernel entries are nonnegative",
                    format!("{lam} -> {}: {}", self.target.diagrams[*j], format_rational(v)),
                ));
            }
            let s: Rational = row.iter().map(|(_, v)| v).sum();
            if !s.is_one() {
                return Err(Violation::new(
                    "kernel rows sum to 1",
                    format!("row {lam} sums to {}", format_rational(&s)),
                ));
            }
        }
        Ok(())
    }
}

/// `p↓(λ, μ) = dim μ / dim λ` for `μ ↗ λ`, as a map `Y_n → Y_{n-1}`.
pub fn down_kernel(n: usize) -> Result<TransitionKernel> {
    if n == 0 {
        return Err(Error::Invalid("the down kernel starts at level 1".into()));
    }
    Ok(TransitionKernel::from_local(Level::new(n), Level::new(n - 1), down_row))
}

/// Local down row of `λ`.
pub fn down_row(lam: &Partition) -> Vec<(Partition, Rational)> {
    removal_ratios(lam)
        .into_iter()
        .map(|(b, r)| (lam.apply(&b), r))
        .collect()
}

/// `p↑(λ, λ•) = box_factor(c) / (d + n) · dim λ• / ((n+1) dim λ)`, as a map
/// `Y_n → Y_{n+1}`.
pub fn up_kernel(n: usize, params: &ZParams) -> Result<TransitionKernel> {
    check_up_denominator(n, params)?;
    Ok(TransitionKernel::from_local(
        Level::new(n),
        Level::new(n + 1),
        |lam| up_row(lam, params).expect("denominator checked"),
    ))
}

fn check_up_denominator(n: usize, params: &ZParams) -> Result<Rational> {
    let den = params.d() + int(n as i64);
    if den.is_zero() {
        return Err(Error::DegenerateParams(format!(
            "d + n = 0 at n = {n}, d = {}",
            format_rational(params.d())
        )));
    }
    Ok(den)
}

/// Local up row of `λ`.
pub fn up_row(lam: &Partition, params: &ZParams) -> Result<Vec<(Partition, Rational)>> {
    let den = check_up_denominator(lam.size(), params)?;
    Ok(growth_ratios(lam)
        .into_iter()
        .map(|(b, r)| (lam.apply(&b), params.box_factor(b.content) * r / &den))
        .collect())
}

/// Exact coherency at level `n`: `M_n p↓ = M_{n-1}` and `M_n p↑ = M_{n+1}`.
pub fn coherency_check(n: usize, params: &ZParams) -> Result<Verdict> {
    let lower = LevelMeasure::new(n - 1, params)?;
    let mid = LevelMeasure::new(n, params)?;
    let upper = LevelMeasure::new(n + 1, params)?;
    coherency_check_measures(&lower, &mid, &upper, params)
}

/// Coherency for caller-supplied measures on levels `n-1, n, n+1`.
pub fn coherency_check_measures(
    lower: &LevelMeasure,
    mid: &LevelMeasure,
    upper: &LevelMeasure,
    params: &ZParams,
) -> Result<Verdict> {
    let n = mid.n();
    let down = down_kernel(n)?;
    let up = up_kernel(n, params)?;
    let checks = [
        ("M_n p_down = M_{n-1}", down.push_forward(&mid.weights), lower),
        ("M_n p_up = M_{n+1}", up.push_forward(&mid.weights), upper),
    ];
    for (identity, pushed, expected) in checks {
        for ((mu, got), want) in expected.level.diagrams.iter().zip(&pushed).zip(&expected.weights)
        {
            if got != want {
                return Ok(Err(Violation::new(
                    identity,
                    format!(
                        "n={n}, {params}: at {mu} got {} expected {}",
                        format_rational(got),
                        format_rational(want)
                    ),
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// `φ(s_ν) = (z)_ν (z')_ν dim ν / ((zz')_m m!)`, i.e. `M_m(ν) / dim ν`.
pub fn phi_schur(nu: &Partition, params: &ZParams) -> Result<Rational> {
    let m = nu.size();
    let denom = params.nonzero_rising(m)? * Rational::from_integer(factorial(m));
    Ok(params.diagram_factor(nu) * biguint_to_rational(&dim(nu)) / denom)
}

/// The functional `φ` on `Λ`, through the Schur expansion of each
/// homogeneous part. It vanishes on the ideal `(p_1 - 1)`.
pub fn phi(f: &PowerSumPoly, params: &ZParams) -> Result<Rational> {
    let mut total = Rational::zero();
    for (_, v) in p_to_schur_graded(f) {
        for (nu, c) in v.terms() {
            total += c * phi_schur(nu, params)?;
        }
    }
    Ok(total)
}

/// `⟨f⟩` under the boundary measure, for `f ∈ Λ°`.
pub fn boundary_expectation(f: &QPoly, params: &ZParams) -> Result<Rational> {
    params.require_admissible()?;
    phi(&lift(f), params)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_level;
    use crate::rat;
    use crate::symfunc::schur_to_p;

    fn p(rows: &[usize]) -> Partition {
        Partition::new(rows.to_vec()).unwrap()
    }

    fn zp(e: Rational, d: Rational) -> ZParams {
        ZParams::classify(e, d)
    }

    pub(crate) fn test_points() -> Vec<ZParams> {
        [
            (int(0), int(1)),
            (int(1), int(1)),
            (int(2), rat(3, 2)),
            (int(1), rat(6, 25)),
            (rat(5, 6), rat(1, 6)),
            (rat(11, 4), rat(15, 8)),
            (rat(-5, 6), rat(1, 6)),
        ]
        .into_iter()
        .map(|(e, d)| zp(e, d))
        .collect()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(zp(int(1), int(1)).series(), Series::Principal);
        assert_eq!(
            zp(int(1), rat(6, 25)).series(),
            Series::Complementary { interval: 0 }
        );
        assert_eq!(zp(int(3), int(2)).series(), Series::NonAdmissible);
        assert_eq!(
            zp(rat(11, 4), rat(15, 8)).series(),
            Series::Complementary { interval: 1 }
        );
        assert_eq!(
            zp(rat(-5, 6), rat(1, 6)).series(),
            Series::Complementary { interval: -1 }
        );
        // z = 1/2, z' = 3/2 straddle the integer 1.
        let straddle = ZParams::from_real_pair(&rat(1, 2), &rat(3, 2));
        assert_eq!(straddle.series(), Series::NonAdmissible);
        // A double real root at a non-integer is still inside one interval.
        let double = ZParams::from_real_pair(&rat(1, 3), &rat(1, 3));
        assert_eq!(double.series(), Series::Complementary { interval: 0 });
        for pt in test_points() {
            assert!(pt.is_admissible(), "{pt}");
            assert!(pt.d().is_positive());
        }
    }

    #[test]
    fn parse_params() {
        let pt: ZParams = "e=1,d=6/25".parse().unwrap();
        assert_eq!(pt, zp(int(1), rat(6, 25)));
        let pt: ZParams = " d = 1 , e = 0 ".parse().unwrap();
        assert_eq!(pt.to_string(), "e=0,d=1");
        assert!("e=1".parse::<ZParams>().is_err());
        assert!("e=1,d=1/0".parse::<ZParams>().is_err());
        assert!("e=1,x=2".parse::<ZParams>().is_err());
    }

    #[test]
    fn box_factor_examples() {
        let pt = zp(int(1), rat(6, 25));
        assert_eq!(pt.box_factor(0), rat(6, 25));
        assert_eq!(pt.box_factor(1), rat(56, 25));
        assert_eq!(pt.box_factor(-1), rat(6, 25));
        // (z + c)(z' + c) with z = 2/5, z' = 3/5.
        for c in -4..=4 {
            let direct = (rat(2, 5) + int(c)) * (rat(3, 5) + int(c));
            assert_eq!(pt.box_factor(c), direct);
        }
    }

    #[test]
    fn weight_examples() {
        for pt in test_points() {
            assert_eq!(weight(&p(&[1]), &pt).unwrap(), int(1));
            let d = pt.d().clone();
            let e = pt.e().clone();
            let two_d1 = int(2) * (&d + int(1));
            assert_eq!(weight(&p(&[2]), &pt).unwrap(), (&d + &e + int(1)) / &two_d1);
            assert_eq!(weight(&p(&[1, 1]), &pt).unwrap(), (&d - &e + int(1)) / &two_d1);
        }
        let bad = zp(int(1), int(-2));
        assert!(matches!(weight(&p(&[2, 1]), &bad), Err(Error::DegenerateParams(_))));
        assert!(weight(&p(&[2]), &bad).is_ok());
    }

    #[test]
    fn level_measures_are_positive_probabilities() {
        for pt in test_points() {
            for n in 0..=8 {
                let m = LevelMeasure::new(n, &pt).unwrap();
                assert_eq!(m.total(), int(1), "{pt} n={n}");
                assert!(m.weights.iter().all(|w| w.is_positive()), "{pt} n={n}");
            }
        }
    }

    #[test]
    fn degenerate_integer_parameters_kill_weights() {
        let pt = ZParams::from_real_pair(&int(1), &int(2));
        assert_eq!(pt.series(), Series::NonAdmissible);
        let m = LevelMeasure::new(4, &pt).unwrap();
        assert_eq!(m.total(), int(1));
        assert!(m.weights.iter().any(|w| w.is_zero()));
    }

    #[test]
    fn down_kernel_examples() {
        let k1 = down_kernel(1).unwrap();
        assert_eq!(k1.entry(&p(&[1]), &Partition::empty()), int(1));
        let k3 = down_kernel(3).unwrap();
        assert_eq!(k3.entry(&p(&[2, 1]), &p(&[2])), rat(1, 2));
        assert_eq!(k3.entry(&p(&[2, 1]), &p(&[1, 1])), rat(1, 2));
        assert_eq!(down_kernel(2).unwrap().entry(&p(&[2]), &p(&[1])), int(1));
        assert!(down_kernel(0).is_err());
        for n in 1..=10 {
            let k = down_kernel(n).unwrap();
            k.check_stochastic().unwrap();
            for (lam, row) in k.source.diagrams.iter().zip(&k.rows) {
                for (j, v) in row {
                    let mu = &k.target.diagrams[*j];
                    let want = biguint_to_rational(&dim(mu)) / biguint_to_rational(&dim(lam));
                    assert_eq!(v, &want);
                }
            }
        }
    }

    #[test]
    fn up_kernel_examples() {
        let pt = zp(int(1), rat(6, 25));
        let k0 = up_kernel(0, &pt).unwrap();
        assert_eq!(k0.entry(&Partition::empty(), &p(&[1])), int(1));
        let k1 = up_kernel(1, &pt).unwrap();
        let (e, d) = (pt.e().clone(), pt.d().clone());
        let den = int(2) * (&d + int(1));
        assert_eq!(k1.entry(&p(&[1]), &p(&[2])), (int(1) + &e + &d) / &den);
        assert_eq!(k1.entry(&p(&[1]), &p(&[1, 1])), (int(1) - &e + &d) / &den);
        let deg = zp(int(0), int(-3));
        assert!(up_kernel(3, &deg).is_err());
        assert!(up_kernel(2, &deg).is_ok());
    }

    #[test]
    fn kernels_are_stochastic() {
        for pt in test_points() {
            for n in 0..=10 {
                up_kernel(n, &pt).unwrap().check_stochastic().unwrap();
            }
        }
    }

    #[test]
    fn up_rows_sum_to_one_even_off_the_admissible_set() {
        // The row-sum identity is polynomial in (e, d).
        let pt = zp(int(3), int(2));
        for lam in enumerate_level(5) {
            let s: Rational = up_row(&lam, &pt).unwrap().iter().map(|(_, v)| v).sum();
            assert_eq!(s, int(1));
        }
    }

    #[test]
    fn coherency() {
        for pt in test_points() {
            for n in 1..=6 {
                coherency_check(n, &pt).unwrap().unwrap();
            }
        }
        coherency_check(8, &zp(int(0), int(1))).unwrap().unwrap();
    }

    #[test]
    fn coherency_detects_a_perturbed_weight() {
        let pt = zp(int(1), rat(6, 25));
        let lower = LevelMeasure::new(3, &pt).unwrap();
        let mut mid = LevelMeasure::new(4, &pt).unwrap();
        let upper = LevelMeasure::new(5, &pt).unwrap();
        mid.weights[2] *= int(2);
        let v = coherency_check_measures(&lower, &mid, &upper, &pt).unwrap();
        assert!(v.is_err());
    }

    #[test]
    fn boundary_expectation_examples() {
        for pt in test_points() {
            let (e, d) = (pt.e().clone(), pt.d().clone());
            assert_eq!(boundary_expectation(&QPoly::one(), &pt).unwrap(), int(1));
            let q1: QPoly = "q1".parse().unwrap();
            let want = &e / (&d + int(1));
            assert_eq!(boundary_expectation(&q1, &pt).unwrap(), want);
            let other_lift: PowerSumPoly = "p2*p1^3".parse().unwrap();
            assert_eq!(phi(&other_lift, &pt).unwrap(), want);
        }
        let bad = zp(int(3), int(2));
        assert!(boundary_expectation(&QPoly::one(), &bad).is_err());
    }

    #[test]
    fn phi_vanishes_on_the_ideal() {
        let p1_minus_1: PowerSumPoly = "p1 - 1".parse().unwrap();
        for pt in [zp(int(1), rat(6, 25)), zp(int(0), int(1))] {
            for m in 0..=6 {
                for mu in enumerate_level(m) {
                    let g = &p1_minus_1 * &schur_to_p(&mu);
                    assert!(phi(&g, &pt).unwrap().is_zero(), "{mu}");
                }
            }
        }
    }

    #[test]
    fn phi_matches_weights_on_schur_functions() {
        let pt = zp(int(2), rat(3, 2));
        for n in 0..=6 {
            for lam in enumerate_level(n) {
                let via_weight = weight(&lam, &pt).unwrap() / biguint_to_rational(&dim(&lam));
                assert_eq!(phi_schur(&lam, &pt).unwrap(), via_weight);
            }
        }
    }
}
