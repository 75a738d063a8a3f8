//! Fractions of Laurent polynomials in `A`, kept in a canonical reduced form.
//!
//! Canonical form: the denominator is an ordinary polynomial in `A` with a
//! nonzero constant term and a positive leading coefficient; numerator and
//! denominator share no polynomial factor and no integer content. Powers of
//! `A` live in the numerator. Two equal fractions have identical canonical
//! forms, so `==` is structural.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{forward_owned, LaurentScalar};
use super::upoly;
use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentScalar,
    den: LaurentScalar,
}

impl RationalFunction {
    /// Builds `num / den` in canonical form. Panics when `den` is zero.
    pub fn new(num: LaurentScalar, den: LaurentScalar) -> Self {
        Self::try_new(num, den).expect("zero denominator")
    }

    pub fn try_new(num: LaurentScalar, den: LaurentScalar) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let (dlow, dd) = den.to_dense();
        let (nlow, nd) = num.to_dense();
        let g = upoly::gcd(&nd, &dd);
        let (mut nd, mut dd) = if g.len() > 1 {
            (upoly::div_exact(&nd, &g), upoly::div_exact(&dd, &g))
        } else {
            (nd, dd)
        };
        let mut c = upoly::content(&nd).gcd(&upoly::content(&dd));
        if dd.last().is_some_and(Signed::is_negative) {
            c = -c;
        }
        if !c.is_one() {
            nd.iter_mut().for_each(|x| *x /= &c);
            dd.iter_mut().for_each(|x| *x /= &c);
        }
        Some(Self {
            num: LaurentScalar::from_dense(nlow - dlow, &nd),
            den: LaurentScalar::from_dense(0, &dd),
        })
    }

    pub fn numerator(&self) -> &LaurentScalar {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentScalar {
        &self.den
    }

    /// The Laurent polynomial this fraction equals, if the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentScalar> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn recip(&self) -> Option<Self> {
        Self::try_new(self.den.clone(), self.num.clone())
    }

    /// Evaluates at a rational `A`; `None` if the denominator vanishes there.
    pub fn eval(&self, a: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(a)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(a)? / d)
    }
}

impl From<LaurentScalar> for RationalFunction {
    fn from(num: LaurentScalar) -> Self {
        Self {
            num,
            den: LaurentScalar::one(),
        }
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        LaurentScalar::constant(c).into()
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        LaurentScalar::zero().into()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        LaurentScalar::one().into()
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return (&self.num + &rhs.num).into();
            }
            return RationalFunction::new(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::new(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    /// Panics on division by zero.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

forward_owned!(RationalFunction, Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for RationalFunction {
    /// `(num)/(den)`, or just the numerator text when the denominator is 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for RationalFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parsed = match s.strip_prefix('(').and_then(|r| r.split_once(")/(")) {
            Some((n, d)) => {
                let d = d
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("malformed fraction `{s}`")))?;
                let num: LaurentScalar = n.parse()?;
                let den: LaurentScalar = d.parse()?;
                Self::try_new(num, den).ok_or_else(|| Error::Parse("zero denominator".into()))?
            }
            None => Self::from(s.parse::<LaurentScalar>()?),
        };
        if parsed.to_string() != s {
            return Err(Error::Parse(format!("non-canonical fraction `{s}`")));
        }
        Ok(parsed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(terms: &[(i64, i64)]) -> LaurentScalar {
        LaurentScalar::from_terms(terms.iter().copied())
    }

    #[test]
    fn reduces_common_factor_and_a_powers() {
        // (A^2 - 1) / (A^3 - A) = A^-1
        let r = RationalFunction::new(l(&[(2, 1), (0, -1)]), l(&[(3, 1), (1, -1)]));
        assert_eq!(r, RationalFunction::from(l(&[(-1, 1)])));
    }

    #[test]
    fn sign_and_content_normalized() {
        let r = RationalFunction::new(l(&[(0, 2)]), l(&[(1, -4), (0, -2)]));
        assert_eq!(r.to_string(), "(-1*A^0)/(2*A^1 + 1*A^0)");
    }

    #[test]
    fn text_round_trip() {
        let r = RationalFunction::new(l(&[(2, 1)]), l(&[(4, 1), (0, 1)]));
        let s = r.to_string();
        assert_eq!(s.parse::<RationalFunction>().unwrap(), r);
    }

    #[test]
    fn field_inverse() {
        let x = RationalFunction::new(l(&[(2, -1), (-2, -1)]), l(&[(0, 3)]));
        assert_eq!(&x * &x.recip().unwrap(), RationalFunction::one());
        assert_eq!(&x / &x, RationalFunction::one());
    }
}
