//! Skein values of paired annular diagrams and the matrix they form.

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use super::encircle::encircle_eigenvalue;
use super::jones_wenzl::delta_k;
use crate::algebra::{
    chebyshev_in_a, loop_value, rank_exact, substitute_delta, ExactMatrix, LaurentScalar,
};
use crate::annular::{enumerate, pair};
use crate::error::{Error, Result};
use crate::gram::{gram_matrix, specialization_nullity};
use crate::guard;
use crate::sampling::{self, NullityEstimate};

pub const MAX_SKEIN_N: usize = 4;

/// Integer `A` values never sampled: zero and the points where `A⁴ = 1`.
pub const A_EXCLUDED: [i64; 3] = [-1, 0, 1];

/// `(−A^{2(k+1)} − A^{−2(k+1)})^m · (−A² − A⁻²)^t · Δ_k`.
pub fn phi(k: usize, m: u32, t: u32) -> LaurentScalar {
    &(&encircle_eigenvalue(k).pow(m) * &loop_value().pow(t)) * &delta_k(k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinValueMatrix {
    pub n: usize,
    pub k: usize,
    pub entries: ExactMatrix<LaurentScalar>,
}

impl SkeinValueMatrix {
    pub fn eval(&self, a: &BigRational) -> Option<ExactMatrix<BigRational>> {
        let mut data = Vec::with_capacity(self.entries.data().len());
        for x in self.entries.data() {
            data.push(x.eval(a)?);
        }
        ExactMatrix::new(self.entries.rows(), self.entries.cols(), data).ok()
    }
}

fn check(n: usize, k: usize) -> Result<()> {
    guard::check("n", n, 1, MAX_SKEIN_N)?;
    guard::check("k", k, 1, usize::MAX)
}

/// Entry `(i, j)` is `phi(k−1, m, t)` where `(m, t)` is the pairing of basis diagrams.
pub fn f_matrix(n: usize, k: usize) -> Result<SkeinValueMatrix> {
    check(n, k)?;
    let basis = enumerate(n)?;
    let size = basis.len();
    let mut cache = std::collections::BTreeMap::new();
    let mut data = Vec::with_capacity(size * size);
    for b1 in &basis {
        for b2 in &basis {
            let v = pair(b1, b2)?;
            let entry = cache
                .entry((v.m, v.t))
                .or_insert_with(|| phi(k - 1, v.m, v.t));
            data.push(entry.clone());
        }
    }
    Ok(SkeinValueMatrix {
        n,
        k,
        entries: ExactMatrix::new(size, size, data)?,
    })
}

/// Checks `Δ_{k−1} · G_n(α, δ)` at `δ = −A² − A⁻²`, `α = (−1)^{k−1} T_k` against `F_{n,k}`.
pub fn f_relation_holds(n: usize, k: usize) -> Result<bool> {
    let f = f_matrix(n, k)?;
    let g = gram_matrix(n)?;
    let alpha = if k % 2 == 1 {
        chebyshev_in_a(k as u32)
    } else {
        -chebyshev_in_a(k as u32)
    };
    let scale = delta_k(k - 1);
    Ok(g.entries()
        .data()
        .iter()
        .zip(f.entries.data())
        .all(|(p, x)| &scale * &substitute_delta(p, &alpha) == *x))
}

fn check_sample(k: usize, a: &BigRational) -> Result<()> {
    let bad = a.is_zero()
        || (a.is_integer()
            && A_EXCLUDED
                .iter()
                .any(|&v| *a == BigRational::from_integer(v.into())))
        || delta_k(k - 1).eval(a).is_none_or(|v| v.is_zero());
    if bad {
        return Err(Error::Precondition(format!(
            "A = {a} is a degenerate sample"
        )));
    }
    Ok(())
}

/// Nullity of `F_{n,k}` evaluated at `A = a` over the rationals.
pub fn nullity_f(n: usize, k: usize, a: &BigRational) -> Result<usize> {
    check(n, k)?;
    guard::check("k", k, 1, n)?;
    check_sample(k, a)?;
    let f = f_matrix(n, k)?;
    let m = f
        .eval(a)
        .ok_or_else(|| Error::Precondition(format!("A = {a} is a pole")))?;
    Ok(m.cols() - rank_exact(&m))
}

/// `δ₀ = −A² − A⁻²` at a rational `A`.
pub fn loop_value_at(a: &BigRational) -> BigRational {
    loop_value().eval(a).expect("nonzero sample")
}

/// Nullity of `F_{n,k}` and of the specialized Gram matrix at the matching `δ₀`.
pub fn nullity_f_and_gram(n: usize, k: usize, a: &BigRational) -> Result<(usize, usize)> {
    let nf = nullity_f(n, k, a)?;
    let ng = specialization_nullity(n, k, &loop_value_at(a))?;
    Ok((nf, ng))
}

/// `nullity_f` at random rational `A` drawn from `rng`.
pub fn sampled_nullity_f(n: usize, k: usize, rng: &mut impl Rng) -> Result<NullityEstimate> {
    check(n, k)?;
    guard::check("k", k, 1, n)?;
    let f = f_matrix(n, k)?;
    let size = f.entries.rows();
    Ok(sampling::generic_nullity(rng, &A_EXCLUDED, |a| {
        let m = f.eval(a).expect("sample avoids poles");
        (rank_exact(&m), size)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn phi_examples() {
        let d = loop_value();
        assert_eq!(phi(0, 2, 1), d.pow(3));
        let e4 = LaurentScalar::from_terms([(4, -1), (-4, -1)]);
        assert_eq!(phi(1, 1, 0), &e4 * &d);
        assert_eq!(phi(1, 0, 1), d.pow(2));
    }

    #[test]
    fn f_matrix_one_one() {
        let f = f_matrix(1, 1).unwrap();
        assert!(f.entries.data().iter().all(|x| *x == loop_value()));
        assert!(f.entries.is_symmetric());
    }

    #[test]
    fn relation_small() {
        for n in 1..=2 {
            for k in 1..=3 {
                assert!(f_relation_holds(n, k).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn nullity_examples() {
        assert_eq!(nullity_f(1, 1, &q(2, 1)).unwrap(), 1);
        let (nf, ng) = nullity_f_and_gram(2, 1, &q(3, 2)).unwrap();
        assert!(nf >= 4);
        assert_eq!(nf, ng);
        let (nf, ng) = nullity_f_and_gram(2, 2, &q(3, 2)).unwrap();
        assert!(nf >= 1);
        assert_eq!(nf, ng);
    }

    #[test]
    fn degenerate_samples_rejected() {
        assert!(nullity_f(1, 1, &q(1, 1)).is_err());
        assert!(nullity_f(1, 1, &q(0, 1)).is_err());
        assert!(nullity_f(2, 3, &q(2, 1)).is_err());
    }
}
