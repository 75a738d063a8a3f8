//! Temperley–Lieb algebra over ℚ(A), Jones–Wenzl idempotents, and the skein
//! values of paired annular diagrams.

mod encircle;
mod evaluation;
mod jones_wenzl;
mod tl;

pub use encircle::{encircle, encircle_eigenvalue, MAX_ENCIRCLE_K};
pub use evaluation::{
    f_matrix, f_relation_holds, loop_value_at, nullity_f, nullity_f_and_gram, phi,
    sampled_nullity_f, SkeinValueMatrix, A_EXCLUDED, MAX_SKEIN_N,
};
pub use jones_wenzl::{delta_k, jones_wenzl, killed_by_caps, specialize, MAX_JW_K};
pub use tl::{
    all_matchings, markov_closure, tl_multiply, tl_multiply_with_loop, PlanarMatching, TLElement,
};
