//! Size guards for the expensive operations.
//!
//! Every operation whose cost grows with a Catalan or central-binomial number
//! refuses inputs beyond a documented limit. Setting the environment variable
//! `TLB_UNGUARDED=1` disables the upper limits (unsupported beyond the guards:
//! runtime and memory are then unbounded).

use crate::error::{Error, Result};

pub const UNGUARDED_ENV: &str = "TLB_UNGUARDED";

pub fn unguarded() -> bool {
    std::env::var(UNGUARDED_ENV).is_ok_and(|v| !v.is_empty() && v != "0")
}

/// Checks `min <= value <= max`; the upper bound is skipped when unguarded.
pub fn check(name: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if value < min || (value > max && !unguarded()) {
        return Err(Error::OutOfRange {
            name,
            value: value as i64,
            min: min as i64,
            max: max as i64,
        });
    }
    Ok(())
}
