//! Chebyshev polynomials with `T_0 = 2`, `T_1 = δ`, `T_i = δ·T_{i-1} - T_{i-2}`,
//! and the substitution `δ = -A² - A⁻²`.

use num_traits::{One, Zero};

use super::bivariate::BivariatePolynomial;
use super::laurent::LaurentScalar;

pub fn chebyshev(i: u32) -> BivariatePolynomial {
    let delta = BivariatePolynomial::delta();
    let mut prev = BivariatePolynomial::constant(2);
    if i == 0 {
        return prev;
    }
    let mut cur = delta.clone();
    for _ in 1..i {
        let next = &(&delta * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `-A² - A⁻²`, the value of a trivial loop.
pub fn loop_value() -> LaurentScalar {
    LaurentScalar::from_terms([(2, -1), (-2, -1)])
}

/// `(-1)^k (A^{2k} + A^{-2k})`, i.e. `T_k(-A² - A⁻²)`.
pub fn chebyshev_in_a(k: u32) -> LaurentScalar {
    let sign: i64 = if k.is_multiple_of(2) { 1 } else { -1 };
    let e = 2 * k as i64;
    LaurentScalar::from_terms([(e, sign), (-e, sign)])
}

/// Ring homomorphism ℤ[α, δ] → ℤ[A, A⁻¹] with δ ↦ -A² - A⁻² and α ↦ `alpha_image`.
pub fn substitute_delta(p: &BivariatePolynomial, alpha_image: &LaurentScalar) -> LaurentScalar {
    let Some(max_a) = p.degree_in_alpha() else {
        return LaurentScalar::zero();
    };
    let max_d = p.degree_in_delta().unwrap_or(0);
    let powers = |base: &LaurentScalar, n: u32| {
        let mut v = vec![LaurentScalar::one()];
        for k in 0..n as usize {
            let next = &v[k] * base;
            v.push(next);
        }
        v
    };
    let alpha_pows = powers(alpha_image, max_a);
    let delta_pows = powers(&loop_value(), max_d);
    let mut acc = LaurentScalar::zero();
    for ((a, d), c) in p.terms() {
        let term = (&alpha_pows[a as usize] * &delta_pows[d as usize]).scale(c);
        acc = &acc + &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn low_order_values() {
        assert_eq!(chebyshev(0), BivariatePolynomial::constant(2));
        assert_eq!(chebyshev(1), BivariatePolynomial::delta());
        assert_eq!(chebyshev(2).to_string(), "1*a^0*d^2 + -2*a^0*d^0");
        assert_eq!(chebyshev(3).to_string(), "1*a^0*d^3 + -3*a^0*d^1");
    }

    #[test]
    fn a_forms() {
        assert_eq!(chebyshev_in_a(0), LaurentScalar::constant(2));
        assert_eq!(chebyshev_in_a(1), loop_value());
        assert_eq!(chebyshev_in_a(2).to_string(), "1*A^4 + 1*A^-4");
    }

    #[test]
    fn substitution_examples() {
        let any = LaurentScalar::from_terms([(3, 7)]);
        assert_eq!(
            substitute_delta(&BivariatePolynomial::delta(), &any),
            loop_value()
        );
        assert_eq!(
            substitute_delta(&BivariatePolynomial::zero(), &any),
            LaurentScalar::zero()
        );
        assert_eq!(
            substitute_delta(&chebyshev(2), &any).to_string(),
            "1*A^4 + 1*A^-4"
        );
        // α ↦ A^3·7 on α·δ
        let ad = BivariatePolynomial::monomial(1, 1, 1);
        let expected = LaurentScalar::from_terms([(5, -7), (1, -7)]);
        assert_eq!(substitute_delta(&ad, &any), expected);
        assert_eq!(expected.coeff(5), BigInt::from(-7));
    }
}
