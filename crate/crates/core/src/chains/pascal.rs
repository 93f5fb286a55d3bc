//! The Pascal-triangle toy chain: states `(a, b)` with `a + b = n`, moved by
//! one up step (add to `a` or `b` with probabilities `(a+1)/(n+2)` and
//! `(b+1)/(n+2)`) and one down step (remove from `a` or `b` with probabilities
//! `a/(n+1)` and `b/(n+1)`). The uniform measure on each level is stationary,
//! and `n²(T_n - 1)` tends to `x(1-x) d²/dx² + (1-2x) d/dx` with `x = a/n`.

use num_traits::{Signed, Zero};

use crate::{format_rational, int, Rational, Verdict, Violation};

/// `T_n((a,b), ·)` as `((a', b'), probability)`, zero entries omitted.
pub fn pascal_row(a: usize, b: usize) -> Vec<((usize, usize), Rational)> {
    let n = (a + b) as i64;
    let den = int((n + 2) * (n + 1));
    let (ai, bi) = (a as i64, b as i64);
    let mut out = Vec::with_capacity(3);
    if b > 0 {
        out.push(((a + 1, b - 1), int((ai + 1) * bi) / &den));
    }
    if a > 0 {
        out.push(((a - 1, b + 1), int(ai * (bi + 1)) / &den));
    }
    out.push(((a, b), int((ai + 1) * (ai + 1) + (bi + 1) * (bi + 1)) / &den));
    out
}

/// Rows sum to 1 and the uniform measure on level `n` is invariant.
pub fn pascal_stationarity_check(n: usize) -> Verdict {
    let mut pushed = vec![Rational::zero(); n + 1];
    for a in 0..=n {
        let row = pascal_row(a, n - a);
        let s: Rational = row.iter().map(|(_, v)| v).sum();
        if s != int(1) {
            return Err(Violation::new(
                "Pascal rows sum to 1",
                format!("row ({a},{}) sums to {}", n - a, format_rational(&s)),
            ));
        }
        for ((a2, _), v) in row {
            pushed[a2] += v;
        }
    }
    match pushed.iter().position(|v| v != &int(1)) {
        None => Ok(()),
        Some(a) => Err(Violation::new(
            "uniform measure is Pascal-stationary",
            format!("level {n}, column sum at a={a} is {}", format_rational(&pushed[a])),
        )),
    }
}

/// A polynomial in `x`, coefficients from the constant term up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniPoly(pub Vec<Rational>);

impl UniPoly {
    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = int(1);
        UniPoly(c)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        UniPoly(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * int(k as i64))
                .collect(),
        )
    }

    /// `(Af)(x) = x(1-x) f''(x) + (1-2x) f'(x)`.
    pub fn apply_generator(&self, x: &Rational) -> Rational {
        let d1 = self.derivative();
        let d2 = d1.derivative();
        x * (int(1) - x) * d2.eval(x) + (int(1) - int(2) * x) * d1.eval(x)
    }
}

/// `max_a |n²(T_n - 1) f (a/n) - (Af)(a/n)|` over the whole level.
pub fn pascal_generator_residual(f: &UniPoly, n: usize) -> Rational {
    let nn = int((n * n) as i64);
    let xn = |a: usize| Rational::new((a as i64).into(), (n as i64).into());
    (0..=n)
        .map(|a| {
            let x = xn(a);
            let fx = f.eval(&x);
            let drift: Rational = pascal_row(a, n - a)
                .into_iter()
                .map(|((a2, _), p)| p * (f.eval(&xn(a2)) - &fx))
                .sum();
            (&nn * drift - f.apply_generator(&x)).abs()
        })
        .max()
        .unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    #[test]
    fn row_examples() {
        let row = pascal_row(1, 1);
        assert_eq!(
            row,
            vec![((2, 0), rat(1, 6)), ((0, 2), rat(1, 6)), ((1, 1), rat(2, 3))]
        );
        let n = 7i64;
        let row = pascal_row(7, 0);
        assert_eq!(row[0], ((6, 1), rat(n, (n + 2) * (n + 1))));
    }

    #[test]
    fn uniform_is_stationary() {
        for n in 1..=50 {
            pascal_stationarity_check(n).unwrap();
        }
    }

    #[test]
    fn generator_residuals() {
        assert!(pascal_generator_residual(&UniPoly(vec![int(1)]), 30).is_zero());
        let x = UniPoly::monomial(1);
        assert_eq!(x.apply_generator(&rat(1, 3)), rat(1, 3));
        // f = x: residual |1 - 2x| (3n+2)/((n+1)(n+2)), largest at the ends.
        for n in [10usize, 20, 40] {
            let n_ = n as i64;
            let want = rat(3 * n_ + 2, (n_ + 1) * (n_ + 2));
            assert_eq!(pascal_generator_residual(&x, n), want);
        }
        let x2 = UniPoly::monomial(2);
        let r: Vec<f64> = [20, 40, 80, 160]
            .iter()
            .map(|&n| crate::to_f64(&pascal_generator_residual(&x2, n)))
            .collect();
        for w in r.windows(2) {
            let ratio = w[1] / w[0];
            assert!((0.4..=0.6).contains(&ratio), "{ratio}");
        }
    }
}
