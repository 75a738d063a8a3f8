//! Exact computations around the type-B Temperley–Lieb Gram determinant.
//!
//! - [`algebra`]: polynomial and matrix arithmetic with no floating point.
//! - [`annular`]: chord diagrams on an annulus with `2n` outer points and their pairing.
//! - [`gram`]: the Gram matrix `G_n(α, δ)`, its determinant and the product formula.
//! - [`combinatorics`]: disk diagram counts and the subset ↔ diagram bijection.
//! - [`skein`]: Temperley–Lieb algebra, Jones–Wenzl idempotents and the `F_{n,k}` matrices.

pub mod algebra;
pub mod annular;
pub mod combinatorics;
pub mod error;
pub mod gram;
pub mod guard;
pub mod sampling;
pub mod skein;

pub use error::{Error, Result};
