//! Two-sided strict comparison under one fuel budget.

use std::fmt;

use cauchy_reals::order::{lt_at, LtWitness};
use cauchy_reals::real::refinement_schedule;
use cauchy_reals::{PositiveRational, RegularReal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Comparison {
    Less(LtWitness),
    Greater(LtWitness),
    /// No witness in either direction; carries the last probe precision.
    Unknown(PositiveRational),
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Comparison::Less(_) => f.write_str("LT"),
            Comparison::Greater(_) => f.write_str("GT"),
            Comparison::Unknown(eta) => write!(f, "UNKNOWN({eta})"),
        }
    }
}

/// Tries `u < v` and then `v < u` at each precision `2^-k`, `k < fuel`.
pub fn compare(u: &RegularReal, v: &RegularReal, fuel: u32) -> Comparison {
    let mut last = PositiveRational::one();
    for eta in refinement_schedule(&PositiveRational::one(), fuel) {
        if let Some(w) = lt_at(u, v, &eta) {
            return Comparison::Less(w);
        }
        if let Some(w) = lt_at(v, u, &eta) {
            return Comparison::Greater(w);
        }
        last = eta;
    }
    Comparison::Unknown(last)
}
