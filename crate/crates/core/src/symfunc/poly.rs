//! Polynomials in countably many indeterminates with rational coefficients.
//!
//! The same container backs the power-sum presentation of `Λ` (variables
//! `p_1, p_2, …`, `deg p_i = i`) and the moment presentation of the quotient
//! `Λ° = Λ/(p_1 - 1)` (variables `q_1, q_2, …`, `deg q_i = i + 1`).

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::{parse_rational, Error, Rational, Result};

/// Naming and grading of a family of indeterminates.
pub trait Variables: Clone + fmt::Debug + PartialEq + Eq + Send + Sync + 'static {
    const SYMBOL: char;
    fn weight(index: usize) -> usize;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerSums;

impl Variables for PowerSums {
    const SYMBOL: char = 'p';
    fn weight(index: usize) -> usize {
        index
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Moments;

impl Variables for Moments {
    const SYMBOL: char = 'q';
    fn weight(index: usize) -> usize {
        index + 1
    }
}

/// A monomial stored as the multiset of its variable indices, sorted in
/// decreasing order. The empty monomial is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variable indices start at 1");
        Monomial(vec![i])
    }

    pub fn from_indices(mut idx: Vec<usize>) -> Self {
        assert!(idx.iter().all(|&i| i >= 1), "variable indices start at 1");
        idx.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(idx)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, i: usize) -> usize {
        self.0.iter().filter(|&&j| j == i).count()
    }

    pub fn weighted_degree<V: Variables>(&self) -> usize {
        self.0.iter().map(|&i| V::weight(i)).sum()
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut a, mut b) = (self.0.iter().peekable(), other.0.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(&&x), Some(&&y)) => {
                    if x >= y {
                        out.push(x);
                        a.next();
                    } else {
                        out.push(y);
                        b.next();
                    }
                }
                (Some(&&x), None) => {
                    out.push(x);
                    a.next();
                }
                (None, Some(&&y)) => {
                    out.push(y);
                    b.next();
                }
                (None, None) => break,
            }
        }
        Monomial(out)
    }

    /// `∂/∂x_i` of the monomial: the exponent and the lowered monomial.
    pub fn derive(&self, i: usize) -> Option<(usize, Monomial)> {
        let pos = self.0.iter().position(|&j| j == i)?;
        let e = self.exponent(i);
        let mut rest = self.0.clone();
        rest.remove(pos);
        Some((e, Monomial(rest)))
    }
}

/// A polynomial in the variables `V`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<V: Variables> {
    terms: BTreeMap<Monomial, Rational>,
    _vars: PhantomData<V>,
}

/// Element of `Λ` written in power sums.
pub type PowerSumPoly = Poly<PowerSums>;
/// Element of `Λ°` written in moment coordinates.
pub type QPoly = Poly<Moments>;

impl<V: Variables> Default for Poly<V> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<V: Variables> Poly<V> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
            _vars: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn var(i: usize) -> Self {
        Self::monomial(Monomial::var(i), Rational::one())
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest weighted degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|m| m.weighted_degree::<V>()).max()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|m| m.weighted_degree::<V>()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    /// Largest variable index appearing, 0 for constants.
    pub fn max_var(&self) -> usize {
        self.terms
            .keys()
            .filter_map(|m| m.indices().first().copied())
            .max()
            .unwrap_or(0)
    }

    pub fn homogeneous_part(&self, degree: usize) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(m, _)| m.weighted_degree::<V>() == degree)
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    pub fn homogeneous_parts(&self) -> BTreeMap<usize, Self> {
        let mut out: BTreeMap<usize, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.weighted_degree::<V>())
                .or_default()
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
            _vars: PhantomData,
        }
    }

    /// `∂/∂x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            m.derive(i)
                .map(|(e, rest)| (rest, c * Rational::from_integer(e.into())))
        }))
    }

    /// Multiplication by a single monomial.
    pub fn times_monomial(&self, m: &Monomial) -> Self {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (k.times(m), c.clone())).collect(),
            _vars: PhantomData,
        }
    }

    /// Multiplication by the variable `x_i`.
    pub fn times_var(&self, i: usize) -> Self {
        self.times_monomial(&Monomial::var(i))
    }

    /// Evaluates with `x_i ↦ values(i)`.
    pub fn eval(&self, mut values: impl FnMut(usize) -> Rational) -> Rational {
        let max = self.max_var();
        let vals: Vec<Rational> = (0..=max)
            .map(|i| if i == 0 { Rational::zero() } else { values(i) })
            .collect();
        self.eval_with(&vals)
    }

    /// Evaluates with `x_i ↦ values[i]` (index 0 unused).
    pub fn eval_with(&self, values: &[Rational]) -> Rational {
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &i in m.indices() {
                t *= &values[i];
            }
            total += t;
        }
        total
    }

    /// Maps every monomial through `f`, which returns a coefficient and a new
    /// monomial in possibly different variables.
    pub fn map_monomials<W: Variables>(
        &self,
        mut f: impl FnMut(&Monomial) -> (Rational, Monomial),
    ) -> Poly<W> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| {
            let (k, m2) = f(m);
            (m2, c * k)
        }))
    }
}

impl<V: Variables> fmt::Debug for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<V: Variables> fmt::Display for Poly<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Lowest degree first reads naturally for filtered algebras.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.weighted_degree::<V>(), std::cmp::Reverse((*m).clone())));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            let mono = format_monomial::<V>(m);
            if mono.is_empty() {
                write!(f, "{}", crate::format_rational(&a))?;
            } else if a.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{}*{}", crate::format_rational(&a), mono)?;
            }
        }
        Ok(())
    }
}

fn format_monomial<V: Variables>(m: &Monomial) -> String {
    let mut parts = Vec::new();
    let idx = m.indices();
    let mut k = 0;
    while k < idx.len() {
        let i = idx[k];
        let e = idx[k..].iter().take_while(|&&j| j == i).count();
        parts.push(if e == 1 {
            format!("{}{}", V::SYMBOL, i)
        } else {
            format!("{}{}^{}", V::SYMBOL, i, e)
        });
        k += e;
    }
    parts.join("*")
}

impl<V: Variables> FromStr for Poly<V> {
    type Err = Error;

    /// Parses sums of terms such as `3/2*q1^2*q3 - q2 + 1`.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero();
        let mut chunks = Vec::new();
        let mut start = 0;
        for (k, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && k > 0 && !compact[..k].ends_with('^') {
                chunks.push(&compact[start..k]);
                start = k;
            }
        }
        chunks.push(&compact[start..]);
        for chunk in chunks {
            let (sign, body) = match chunk.as_bytes().first() {
                Some(b'-') => (-Rational::one(), &chunk[1..]),
                Some(b'+') => (Rational::one(), &chunk[1..]),
                _ => (Rational::one(), chunk),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let mut coeff = sign;
            let mut idx = Vec::new();
            for factor in body.split('*') {
                if let Some(rest) = factor.strip_prefix(V::SYMBOL) {
                    let (i, e) = match rest.split_once('^') {
                        Some((i, e)) => (i, e),
                        None => (rest, "1"),
                    };
                    let i: usize = i
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable {factor:?}")))?;
                    let e: usize = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent {factor:?}")))?;
                    if i == 0 {
                        return Err(Error::Parse(format!("variable index 0 in {factor:?}")));
                    }
                    idx.extend(std::iter::repeat_n(i, e));
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            out.add_term(Monomial::from_indices(idx), coeff);
        }
        Ok(out)
    }
}

impl<V: Variables> Add for &Poly<V> {
    type Output = Poly<V>;
    fn add(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<V: Variables> Sub for &Poly<V> {
    type Output = Poly<V>;
    fn sub(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<V: Variables> Mul for &Poly<V> {
    type Output = Poly<V>;
    fn mul(self, rhs: &Poly<V>) -> Poly<V> {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }
}

impl<V: Variables> Neg for &Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl<V: Variables> $tr for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: Poly<V>) -> Poly<V> {
                (&self).$method(&rhs)
            }
        }
        impl<V: Variables> $tr<&Poly<V>> for Poly<V> {
            type Output = Poly<V>;
            fn $method(self, rhs: &Poly<V>) -> Poly<V> {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<V: Variables> Neg for Poly<V> {
    type Output = Poly<V>;
    fn neg(self) -> Poly<V> {
        -&self
    }
}
