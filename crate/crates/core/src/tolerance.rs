//! Comparison thresholds shared by checks and tests.

use crate::numeric::{Precision, Real};

/// Relative agreement required between independent high-precision routes.
pub const AGREEMENT_DIGITS: u32 = 30;

/// Maximum distance of a Verlinde sum from the nearest integer.
pub const VERLINDE_RESIDUE: f64 = 1e-9;

/// Default cap on the Weyl group order for explicit sums.
pub const DEFAULT_WEYL_CAP: u64 = 10_000_000;

/// Default cap on the size of a weight system.
pub const DEFAULT_WEIGHT_SYSTEM_CAP: usize = 100_000;

/// Relative tolerance for the large-level asymptotic ratio.
pub const ASYMPTOTE_REL: f64 = 1e-3;

pub fn agreement(prec: Precision) -> Real {
    Real::ten_pow_neg(AGREEMENT_DIGITS, prec)
}
