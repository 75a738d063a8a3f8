//! Sparse Laurent polynomials in one variable `A` with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::upoly::Dense;
use crate::error::Error;

/// An element of ℤ[A, A⁻¹], stored as exponent → coefficient with no zero entries.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentScalar {
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut terms = BTreeMap::new();
        let c = coeff.into();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `A`.
    pub fn a() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::default();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `A^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates at a rational `A`. Returns `None` at `A = 0` when a negative
    /// exponent is present.
    pub fn eval(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() && self.min_exp().is_some_and(|e| e < 0) {
            return None;
        }
        let mut acc = BigRational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                pow_rat(a, e as u64)
            } else {
                pow_rat(&a.recip(), (-e) as u64)
            };
            acc += p * BigRational::from_integer(c.clone());
        }
        Some(acc)
    }

    /// Splits into `A^low · p(A)` with `p` a dense polynomial with nonzero constant term.
    pub(crate) fn to_dense(&self) -> (i64, Dense) {
        let Some(low) = self.min_exp() else {
            return (0, Vec::new());
        };
        let high = self.max_exp().unwrap_or(low);
        let mut d = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms() {
            d[(e - low) as usize] = c.clone();
        }
        (low, d)
    }

    pub(crate) fn from_dense(low: i64, d: &[BigInt]) -> Self {
        Self::from_terms(
            d.iter()
                .enumerate()
                .map(|(i, c)| (low + i as i64, c.clone())),
        )
    }
}

pub(crate) fn pow_rat(x: &BigRational, e: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut base = x.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        e >>= 1;
        if e > 0 {
            base = &base * &base;
        }
    }
    acc
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for LaurentScalar {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn add(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn sub(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentScalar> for &'a LaurentScalar {
    type Output = LaurentScalar;
    fn mul(self, rhs: &LaurentScalar) -> LaurentScalar {
        let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                *acc.entry(e1 + e2).or_insert_with(BigInt::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentScalar { terms: acc }
    }
}

impl Neg for &LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        LaurentScalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentScalar {
    type Output = LaurentScalar;
    fn neg(self) -> LaurentScalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a $t> for $t {
            type Output = $t;
            fn $m(self, rhs: &'a $t) -> $t {
                (&self).$m(rhs)
            }
        }
    )*};
}
pub(crate) use forward_owned;

forward_owned!(LaurentScalar, Add add, Sub sub, Mul mul);

impl fmt::Display for LaurentScalar {
    /// Canonical text: `1*A^4 + 1*A^-4`, exponents descending; zero is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*A^{e}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for LaurentScalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut last: Option<i64> = None;
        for term in s.split(" + ") {
            let bad = || Error::Parse(format!("malformed Laurent term `{term}`"));
            let (c, rest) = term.split_once("*A^").ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let e: i64 = rest.parse().map_err(|_| bad())?;
            if c.is_zero() || last.is_some_and(|l| e >= l) {
                return Err(Error::Parse(format!("non-canonical Laurent text `{s}`")));
            }
            last = Some(e);
            out.add_term(e, c);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_descending() {
        let x = LaurentScalar::from_terms([(-4, 1), (4, 1)]);
        assert_eq!(x.to_string(), "1*A^4 + 1*A^-4");
        assert_eq!(x.to_string().parse::<LaurentScalar>().unwrap(), x);
    }

    #[test]
    fn rejects_non_canonical_text() {
        assert!("1*A^-4 + 1*A^4".parse::<LaurentScalar>().is_err());
        assert!("0*A^1".parse::<LaurentScalar>().is_err());
        assert!("A^2".parse::<LaurentScalar>().is_err());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let x = LaurentScalar::from_terms([(2, 3), (-1, 1)]);
        let y = LaurentScalar::from_terms([(2, -3)]);
        let s = &x + &y;
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(-1), BigInt::from(1));
    }

    #[test]
    fn eval_at_rational() {
        // A^2 + A^-2 at A = 2 is 17/4
        let x = LaurentScalar::from_terms([(2, 1), (-2, 1)]);
        let v = x.eval(&BigRational::from_integer(2.into())).unwrap();
        assert_eq!(v, BigRational::new(17.into(), 4.into()));
        assert!(x.eval(&BigRational::zero()).is_none());
    }
}
