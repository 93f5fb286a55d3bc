//! Exact-arithmetic toolkit for z-measures on Young diagrams, the up-down
//! Markov chains they define, and the second-order differential operator on
//! the Thoma simplex that governs their scaling limit.
//!
//! All combinatorial and algebraic quantities are computed with arbitrary
//! precision rationals. Floating point only appears in Monte Carlo summaries.
//!
//! Module map:
//!
//! * [`partitions`]: Young diagrams, Frobenius coordinates, dimensions.
//! * [`symfunc`]: symmetric functions in the power-sum basis, characters,
//!   Schur expansions, evaluation on diagrams, the quotient by `p1 - 1`.
//! * [`zmeasure`]: parameters, level weights, down/up kernels, and the
//!   boundary expectation functional.
//! * [`chains`]: the up-down chain, reversibility checks, sampling, the
//!   Thoma-simplex embedding, and the Pascal-triangle toy model.
//! * [`generator`]: the limit pre-generator in all of its forms, the sl(2)
//!   checks, spectrum, carré du champ and the Dirichlet-form identity.

pub mod chains;
mod error;
pub mod generator;
pub mod linalg;
pub mod partitions;
pub mod symfunc;
pub mod zmeasure;

pub use error::{Error, Result, Verdict, Violation};
pub use partitions::Partition;
pub use zmeasure::ZParams;

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;

/// Parses `"num/den"` or an integer string into an exact rational.
///
/// Zero denominators are rejected rather than panicking.
pub fn parse_rational(s: &str) -> Result<Rational> {
    use num_bigint::BigInt;
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if num_traits::Zero::is_zero(&den) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational as `num/den`, or just `num` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Lossy conversion for reporting; exact values should be printed with
/// [`format_rational`].
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("6/25").unwrap(), rat(6, 25));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational(" 4/-8 ").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&rat(-62, 25)), "-62/25");
        assert_eq!(format_rational(&int(7)), "7");
        assert_eq!(format_rational(&rat(4, 2)), "2");
    }
}
