//! Jones–Wenzl idempotents and the closed-form value of their closure.

use num_traits::Zero;

use super::tl::{tl_multiply, PlanarMatching, TLElement};
use crate::algebra::{LaurentScalar, RationalFunction};
use crate::error::Result;
use crate::guard;

pub const MAX_JW_K: usize = 8;

/// `(−1)^k Σ_{i=0..k} A^{2k−4i}`, the closure of `f_k`.
pub fn delta_k(k: usize) -> LaurentScalar {
    let sign: i64 = if k.is_multiple_of(2) { 1 } else { -1 };
    let k = k as i64;
    LaurentScalar::from_terms((0..=k).map(|i| (2 * k - 4 * i, sign)))
}

/// `f_k` by the recurrence `f_k = f_{k−1} − (Δ_{k−2}/Δ_{k−1}) f_{k−1} e_{k−1} f_{k−1}`.
pub fn jones_wenzl(k: usize) -> Result<TLElement> {
    guard::check("k", k, 0, MAX_JW_K)?;
    let mut f = TLElement::identity(k.min(1));
    for j in 2..=k {
        let prev = f.extend();
        let e = TLElement::diagram(PlanarMatching::generator(j, j - 1)?);
        let sandwich = tl_multiply(&tl_multiply(&prev, &e)?, &prev)?;
        let ratio = RationalFunction::new(delta_k(j - 2), delta_k(j - 1));
        f = prev.sub(&sandwich.scale(&ratio))?;
    }
    Ok(f)
}

/// True when `e_i · x` and `x · e_i` vanish for every generator.
pub fn killed_by_caps(x: &TLElement) -> Result<bool> {
    let k = x.k();
    for i in 1..k {
        let e = TLElement::diagram(PlanarMatching::generator(k, i)?);
        if !tl_multiply(&e, x)?.is_zero() || !tl_multiply(x, &e)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluates every coefficient at a rational `A`, giving an element whose
/// coefficients are constants. Returns `None` if a denominator vanishes.
pub fn specialize(x: &TLElement, a: &num_rational::BigRational) -> Option<TLElement> {
    let mut bad = false;
    let out = x.map_coeffs(|c| match c.eval(a) {
        Some(v) => RationalFunction::new(
            LaurentScalar::constant(v.numer().clone()),
            LaurentScalar::constant(v.denom().clone()),
        ),
        None => {
            bad = true;
            RationalFunction::zero()
        }
    });
    (!bad).then_some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::loop_value;
    use crate::skein::tl::markov_closure;
    use num_traits::One;

    #[test]
    fn delta_values() {
        assert_eq!(delta_k(0), LaurentScalar::constant(1));
        assert_eq!(delta_k(1), loop_value());
        assert_eq!(
            delta_k(2),
            LaurentScalar::from_terms([(4, 1), (0, 1), (-4, 1)])
        );
    }

    #[test]
    fn delta_recurrence() {
        // Δ_{k+1} = δ Δ_k − Δ_{k−1}
        for k in 1..10 {
            assert_eq!(delta_k(k + 1), &loop_value() * &delta_k(k) - delta_k(k - 1));
        }
    }

    #[test]
    fn first_idempotents() {
        assert_eq!(jones_wenzl(1).unwrap(), TLElement::identity(1));
        let f2 = jones_wenzl(2).unwrap();
        let e1 = PlanarMatching::generator(2, 1).unwrap();
        assert_eq!(
            f2.coeff(&PlanarMatching::identity(2)),
            RationalFunction::one()
        );
        assert_eq!(
            f2.coeff(&e1),
            -RationalFunction::new(LaurentScalar::constant(1), loop_value())
        );
        assert_eq!(f2.len(), 2);
    }

    #[test]
    fn idempotent_and_closure_small() {
        for k in 1..=4 {
            let f = jones_wenzl(k).unwrap();
            assert_eq!(tl_multiply(&f, &f).unwrap(), f, "k={k}");
            assert!(killed_by_caps(&f).unwrap());
            assert_eq!(markov_closure(&f), RationalFunction::from(delta_k(k)));
        }
    }

    #[test]
    fn guard() {
        assert!(jones_wenzl(MAX_JW_K + 1).is_err());
    }
}
