//! The Gram matrix `G_n(α, δ)` of the annular pairing, its determinant, and
//! the checks around the product formula
//! `det G_n = ∏_{i=1..n} (T_i(δ)² − α²)^{C(2n, n−i)}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::algebra::{
    chebyshev, det_fraction_free, det_modular, rank_exact, BivariatePolynomial, ExactMatrix,
    PrimeField, PRIMES,
};
use crate::annular::{enumerate, pair, AnnularDiagram, PairingValue};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::guard;
use crate::sampling::{self, NullityEstimate};

pub const MAX_GRAM_N: usize = 5;
pub const MAX_SYMBOLIC_N: usize = 3;

#[derive(Clone, Debug)]
pub struct GramMatrix {
    n: usize,
    basis: Vec<AnnularDiagram>,
    pairings: ExactMatrix<PairingValue>,
    entries: ExactMatrix<BivariatePolynomial>,
}

pub fn gram_matrix(n: usize) -> Result<GramMatrix> {
    guard::check("n", n, 1, MAX_GRAM_N)?;
    let basis = enumerate(n)?;
    let size = basis.len();
    let mut pairings = Vec::with_capacity(size * size);
    for x in &basis {
        for y in &basis {
            pairings.push(pair(x, y)?);
        }
    }
    let pairings = ExactMatrix::new(size, size, pairings)?;
    let entries = pairings.map(|p| p.to_polynomial());
    Ok(GramMatrix {
        n,
        basis,
        pairings,
        entries,
    })
}

impl GramMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[AnnularDiagram] {
        &self.basis
    }

    pub fn pairings(&self) -> &ExactMatrix<PairingValue> {
        &self.pairings
    }

    pub fn entries(&self) -> &ExactMatrix<BivariatePolynomial> {
        &self.entries
    }

    pub fn sign_matrix(&self) -> SignMatrix {
        SignMatrix::from_basis(&self.basis)
    }

    /// Entries evaluated at `(α, δ)` in ℤ/pℤ.
    pub fn eval_mod(&self, alpha: u64, delta: u64, field: &PrimeField) -> ExactMatrix<u64> {
        let n = self.n as u64;
        let ap: Vec<u64> = (0..=n).map(|e| field.pow(alpha, e)).collect();
        let dp: Vec<u64> = (0..=n).map(|e| field.pow(delta, e)).collect();
        self.pairings
            .map(|p| field.mul(ap[p.m as usize], dp[p.t as usize]))
    }

    pub fn eval_rational(
        &self,
        alpha: &BigRational,
        delta: &BigRational,
    ) -> ExactMatrix<BigRational> {
        let powers = |x: &BigRational| {
            let mut v = vec![BigRational::one()];
            for k in 0..self.n {
                let next = &v[k] * x;
                v.push(next);
            }
            v
        };
        let (ap, dp) = (powers(alpha), powers(delta));
        self.pairings.map(|p| &ap[p.m as usize] * &dp[p.t as usize])
    }

    /// Symmetric, constant diagonal `δ^n`, monomial entries.
    pub fn has_expected_shape(&self) -> bool {
        let size = self.size();
        self.entries.is_symmetric()
            && (0..size).all(|i| {
                self.pairings.get(i, i)
                    == &PairingValue {
                        m: 0,
                        t: self.n as u32,
                    }
            })
            && self
                .entries
                .data()
                .iter()
                .all(|e| e.as_monomial().is_some_and(|(c, _, _)| c.is_one()))
    }

    /// `m ≡ c(b_i) + c(b_j) (mod 2)` for every entry.
    pub fn alpha_parity_holds(&self) -> bool {
        let cuts: Vec<usize> = self
            .basis
            .iter()
            .map(AnnularDiagram::cut_crossings)
            .collect();
        (0..self.size()).all(|i| {
            (0..self.size())
                .all(|j| self.pairings.get(i, j).m as usize % 2 == (cuts[i] + cuts[j]) % 2)
        })
    }
}

/// Diagonal `P` with `p_ii = (−1)^{c(b_i)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignMatrix {
    diagonal: Vec<i8>,
}

impl SignMatrix {
    pub fn from_basis(basis: &[AnnularDiagram]) -> Self {
        let diagonal = basis
            .iter()
            .map(|b| if b.cut_crossings() % 2 == 0 { 1 } else { -1 })
            .collect();
        Self { diagonal }
    }

    pub fn diagonal(&self) -> &[i8] {
        &self.diagonal
    }

    pub fn to_matrix(&self) -> ExactMatrix<BigInt> {
        let n = self.diagonal.len();
        ExactMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::from(self.diagonal[i])
            } else {
                BigInt::zero()
            }
        })
    }

    /// `P · P = I`.
    pub fn is_involution(&self) -> bool {
        self.diagonal.iter().all(|&s| s * s == 1)
    }

    /// `P M P⁻¹`, which for a ±1 diagonal is `(p_i p_j m_ij)`.
    pub fn conjugate(
        &self,
        m: &ExactMatrix<BivariatePolynomial>,
    ) -> ExactMatrix<BivariatePolynomial> {
        ExactMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            let e = m.get(i, j);
            if self.diagonal[i] * self.diagonal[j] == 1 {
                e.clone()
            } else {
                -e
            }
        })
    }
}

/// Exponent `C(2n, n−i)` of the `i`-th factor.
pub fn factor_multiplicity(n: usize, i: usize) -> BigInt {
    binomial(2 * n as i64, n as i64 - i as i64)
}

fn multiplicity_u32(n: usize, i: usize) -> u32 {
    u32::try_from(factor_multiplicity(n, i)).expect("multiplicity fits in u32 within the guards")
}

/// `∏_{i=1..n} (T_i(δ)² − α²)^{C(2n, n−i)}`, fully expanded.
pub fn product_formula(n: usize) -> Result<BivariatePolynomial> {
    guard::check("n", n, 1, MAX_SYMBOLIC_N)?;
    let alpha_sq = BivariatePolynomial::monomial(1, 2, 0);
    let mut acc = BivariatePolynomial::one();
    for i in 1..=n {
        let t = chebyshev(i as u32);
        let factor = &(&t * &t) - &alpha_sq;
        acc = &acc * &factor.pow(multiplicity_u32(n, i));
    }
    Ok(acc)
}

/// The product formula evaluated at a point of ℤ/pℤ; any `n ≥ 1`.
pub fn product_formula_mod(n: usize, alpha: u64, delta: u64, field: &PrimeField) -> u64 {
    let a2 = field.mul(alpha, alpha);
    let (mut prev, mut cur) = (field.from_i64(2), delta % field.modulus());
    let mut acc = 1;
    for i in 1..=n {
        if i > 1 {
            let next = field.sub(field.mul(delta, cur), prev);
            prev = std::mem::replace(&mut cur, next);
        }
        let factor = field.sub(field.mul(cur, cur), a2);
        let e = factor_multiplicity(n, i);
        let e = u64::try_from(e).expect("multiplicity fits in u64");
        acc = field.mul(acc, field.pow(factor, e));
    }
    acc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Symbolic,
    Modular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialResult {
    pub index: usize,
    pub alpha: u64,
    pub delta: u64,
    pub determinant: u64,
    pub product: u64,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub mode: Mode,
    pub trials: usize,
    pub prime: Option<u64>,
    pub seed: Option<u64>,
    pub pass: bool,
    /// Schwartz–Zippel bound `trials · degree / p` (modular mode).
    pub bound: Option<BigRational>,
    pub degree_bound: Option<u64>,
    pub determinant: Option<BivariatePolynomial>,
    pub product: Option<BivariatePolynomial>,
    pub trial_results: Vec<TrialResult>,
}

impl VerificationReport {
    /// Whether the failure bound is below `2^-bits`.
    pub fn bound_below_pow2(&self, bits: u32) -> bool {
        self.bound
            .as_ref()
            .is_some_and(|b| b < &BigRational::new(BigInt::one(), BigInt::one() << bits))
    }
}

/// Prime used for modular verification with a given seed.
pub fn prime_for_seed(seed: u64) -> u64 {
    PRIMES[(seed % PRIMES.len() as u64) as usize]
}

/// Degree bound used in the Schwartz–Zippel estimate: twice `n·C(2n, n)`.
pub fn sz_degree_bound(n: usize) -> u64 {
    let d = BigInt::from(2 * n) * binomial(2 * n as i64, n as i64);
    u64::try_from(d).expect("degree bound fits in u64")
}

pub fn verify_product_formula(
    n: usize,
    mode: Mode,
    trials: usize,
    seed: u64,
) -> Result<VerificationReport> {
    match mode {
        Mode::Symbolic => {
            guard::check("n", n, 1, MAX_SYMBOLIC_N)?;
            let g = gram_matrix(n)?;
            let det = det_fraction_free(g.entries())?;
            let product = product_formula(n)?;
            Ok(VerificationReport {
                n,
                mode,
                trials: 0,
                prime: None,
                seed: None,
                pass: det == product,
                bound: None,
                degree_bound: None,
                determinant: Some(det),
                product: Some(product),
                trial_results: Vec::new(),
            })
        }
        Mode::Modular => {
            guard::check("trials", trials, 1, usize::MAX)?;
            let g = gram_matrix(n)?;
            let p = prime_for_seed(seed);
            let degree = sz_degree_bound(n);
            if p <= degree {
                return Err(Error::Precondition(format!(
                    "prime {p} not above degree bound {degree}"
                )));
            }
            let field = PrimeField::new(p)?;
            let mut rng = sampling::rng(seed);
            let mut results = Vec::with_capacity(trials);
            for index in 0..trials {
                let alpha = rng.gen_range(0..p);
                let delta = rng.gen_range(0..p);
                let determinant = det_modular(&g.eval_mod(alpha, delta, &field), p)?;
                let product = product_formula_mod(n, alpha, delta, &field);
                results.push(TrialResult {
                    index,
                    alpha,
                    delta,
                    determinant,
                    product,
                    pass: determinant == product,
                });
            }
            let bound =
                BigRational::new(BigInt::from(trials) * BigInt::from(degree), BigInt::from(p));
            Ok(VerificationReport {
                n,
                mode,
                trials,
                prime: Some(p),
                seed: Some(seed),
                pass: results.iter().all(|r| r.pass),
                bound: Some(bound),
                degree_bound: Some(degree),
                determinant: None,
                product: None,
                trial_results: results,
            })
        }
    }
}

/// `G_n(−α, δ) = P G_n(α, δ) P⁻¹`, checked entrywise, together with the
/// α-parity law it rests on.
pub fn verify_sign_conjugation(n: usize) -> Result<bool> {
    let g = gram_matrix(n)?;
    let p = g.sign_matrix();
    let flipped = g.entries().map(BivariatePolynomial::negate_alpha);
    Ok(p.is_involution() && g.alpha_parity_holds() && flipped == p.conjugate(g.entries()))
}

fn check_k(n: usize, k: usize) -> Result<()> {
    guard::check("k", k, 1, n)
}

/// `α = (−1)^{k−1} T_k(δ₀)` as a rational number.
pub fn specialized_alpha(k: usize, delta: &BigRational) -> BigRational {
    let t = chebyshev(k as u32).eval_rational(&BigRational::zero(), delta);
    if k % 2 == 1 {
        t
    } else {
        -t
    }
}

/// Nullity of `G_n(α, δ₀)` at `α = sign · T_k(δ₀)`.
pub fn nullity_at(g: &GramMatrix, alpha: &BigRational, delta: &BigRational) -> usize {
    g.size() - rank_exact(&g.eval_rational(alpha, delta))
}

/// Nullity of `G_n` at `α = (−1)^{k−1} T_k(δ₀)`, `δ = δ₀`.
pub fn specialization_nullity(n: usize, k: usize, delta: &BigRational) -> Result<usize> {
    check_k(n, k)?;
    let g = gram_matrix(n)?;
    Ok(nullity_at(&g, &specialized_alpha(k, delta), delta))
}

/// Integer δ values where some `T_i(δ) = ±T_k(δ)` can coincide; every such
/// rational point is `2cos(rπ)`, i.e. one of these.
pub const DELTA_EXCLUDED: [i64; 5] = [-2, -1, 0, 1, 2];

/// Specialization nullity at random rational δ samples drawn from `rng`.
pub fn sampled_specialization_nullity(
    n: usize,
    k: usize,
    rng: &mut impl Rng,
) -> Result<NullityEstimate> {
    check_k(n, k)?;
    let g = gram_matrix(n)?;
    Ok(sampling::generic_nullity(rng, &DELTA_EXCLUDED, |d| {
        let nullity = nullity_at(&g, &specialized_alpha(k, d), d);
        (g.size() - nullity, g.size())
    }))
}

/// Both sides of `2 Σ_{i=1..n} i·C(2n, n−i) = n·C(2n, n)`.
pub fn telescoping(n: usize) -> (BigInt, BigInt) {
    let n_i = n as i64;
    let lhs: BigInt = (1..=n_i)
        .map(|i| BigInt::from(i) * binomial(2 * n_i, n_i - i))
        .sum::<BigInt>()
        * 2;
    let rhs = BigInt::from(n) * binomial(2 * n_i, n_i);
    (lhs, rhs)
}
