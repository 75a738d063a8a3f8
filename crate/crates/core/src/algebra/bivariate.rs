//! Sparse polynomials in ℤ[α, δ].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::{forward_owned, pow_rat};
use super::modular::PrimeField;
use crate::error::Error;

/// Exponent pair `(power of α, power of δ)`.
pub type Exponents = (u32, u32);

/// A polynomial in α and δ with big-integer coefficients and no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Exponents, BigInt>,
}

impl BivariatePolynomial {
    pub fn monomial(coeff: impl Into<BigInt>, alpha: u32, delta: u32) -> Self {
        let mut terms = BTreeMap::new();
        let c = coeff.into();
        if !c.is_zero() {
            terms.insert((alpha, delta), c);
        }
        Self { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn alpha() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn delta() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::default();
        for (e, c) in terms {
            out.add_term(e, c.into());
        }
        out
    }

    fn add_term(&mut self, exp: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Terms in ascending `(α, δ)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponents, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, alpha: u32, delta: u32) -> BigInt {
        self.terms.get(&(alpha, delta)).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Some((c, m, t))` when the polynomial is a single term `c·α^m·δ^t`.
    pub fn as_monomial(&self) -> Option<(&BigInt, u32, u32)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|((a, d), c)| (c, *a, *d))
    }

    pub fn degree_in_delta(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, d)| d).max()
    }

    pub fn degree_in_alpha(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, d)| a + d).max()
    }

    /// Coefficient of the top power of δ, as a polynomial in α alone.
    pub fn delta_leading_coefficient(&self) -> Self {
        let Some(top) = self.degree_in_delta() else {
            return Self::zero();
        };
        Self::from_terms(
            self.terms()
                .filter(|((_, d), _)| *d == top)
                .map(|((a, _), c)| ((a, 0), c.clone())),
        )
    }

    /// The image under α ↦ −α.
    pub fn negate_alpha(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, d), c)| ((a, d), if a % 2 == 1 { -c } else { c.clone() }))
                .collect(),
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

    pub fn eval_rational(&self, alpha: &BigRational, delta: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((a, d), c) in self.terms() {
            acc += pow_rat(alpha, a as u64)
                * pow_rat(delta, d as u64)
                * BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn eval_mod(&self, alpha: u64, delta: u64, field: &PrimeField) -> u64 {
        self.terms().fold(0, |acc, ((a, d), c)| {
            let term = field.mul(
                field.mul(field.reduce(c), field.pow(alpha, a as u64)),
                field.pow(delta, d as u64),
            );
            field.add(acc, term)
        })
    }

    /// Exact quotient in ℤ[α, δ], or `None` when `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (&(la, ld), lc) = rhs.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((&(ra, rd), rc)) = rem.terms.iter().next_back() {
            if ra < la || rd < ld {
                return None;
            }
            let (qc, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let (qa, qd) = (ra - la, rd - ld);
            for (&(a, d), c) in &rhs.terms {
                rem.add_term((a + qa, d + qd), -(c * &qc));
            }
            quot.add_term((qa, qd), qc);
        }
        Some(quot)
    }
}

impl Zero for BivariatePolynomial {
    fn zero() -> Self {
        Self::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for BivariatePolynomial {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl From<i64> for BivariatePolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl<'a> Mul<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BivariatePolynomial::zero();
        }
        let da = self.degree_in_alpha().unwrap_or(0) + rhs.degree_in_alpha().unwrap_or(0);
        let dd =
            (self.degree_in_delta().unwrap_or(0) + rhs.degree_in_delta().unwrap_or(0)) as usize;
        let cells = (da as usize + 1) * (dd + 1);
        // Dense accumulation pays off whenever the product grid is not much
        // larger than the number of term pairs.
        if cells <= 4 * self.len() * rhs.len() {
            let mut grid = vec![BigInt::zero(); cells];
            for (&(a1, d1), c1) in &self.terms {
                for (&(a2, d2), c2) in &rhs.terms {
                    grid[(a1 + a2) as usize * (dd + 1) + (d1 + d2) as usize] += c1 * c2;
                }
            }
            let terms = grid
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (((i / (dd + 1)) as u32, (i % (dd + 1)) as u32), c))
                .collect();
            BivariatePolynomial { terms }
        } else {
            let mut acc: BTreeMap<Exponents, BigInt> = BTreeMap::new();
            for (&(a1, d1), c1) in &self.terms {
                for (&(a2, d2), c2) in &rhs.terms {
                    *acc.entry((a1 + a2, d1 + d2)).or_insert_with(BigInt::zero) += c1 * c2;
                }
            }
            acc.retain(|_, c| !c.is_zero());
            BivariatePolynomial { terms: acc }
        }
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

forward_owned!(BivariatePolynomial, Add add, Sub sub, Mul mul);

impl fmt::Display for BivariatePolynomial {
    /// Canonical text: `-1*a^2*d^0 + 1*a^0*d^2`, sorted by `(α, δ)` descending.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, ((a, d), c)) in self.terms().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}*a^{a}*d^{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for BivariatePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut out = Self::zero();
        let mut last: Option<Exponents> = None;
        for term in s.split(" + ") {
            let bad = || Error::Parse(format!("malformed polynomial term `{term}`"));
            let (c, rest) = term.split_once("*a^").ok_or_else(bad)?;
            let (a, d) = rest.split_once("*d^").ok_or_else(bad)?;
            let c: BigInt = c.parse().map_err(|_| bad())?;
            let e: Exponents = (a.parse().map_err(|_| bad())?, d.parse().map_err(|_| bad())?);
            if c.is_zero() || last.is_some_and(|l| e >= l) {
                return Err(Error::Parse(format!("non-canonical polynomial text `{s}`")));
            }
            last = Some(e);
            out.add_term(e, c);
        }
        Ok(out)
    }
}
