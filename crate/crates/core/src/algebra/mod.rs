//! Exact arithmetic: big-integer polynomials in (α, δ) and in A^±1, rational
//! functions in A, and exact linear algebra over ℤ, ℚ, ℤ[α, δ] and ℤ/pℤ.

pub mod bivariate;
pub mod chebyshev;
pub mod laurent;
pub mod matrix;
pub mod modular;
pub mod rational_function;
mod upoly;

pub use bivariate::BivariatePolynomial;
pub use chebyshev::{chebyshev, chebyshev_in_a, loop_value, substitute_delta};
pub use laurent::LaurentScalar;
pub use matrix::{det_fraction_free, nullity_exact, rank_exact, ExactDivision, ExactMatrix};
pub use modular::{det_modular, is_prime, PrimeField, PRIMES};
pub use rational_function::RationalFunction;
