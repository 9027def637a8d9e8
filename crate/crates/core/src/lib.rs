//! Exact real arithmetic on regular Cauchy approximations.
//!
//! A real is a function from a positive rational precision `ε` to a rational
//! approximant, subject to the regularity contract
//! `|x(ε) - x(δ)| <= ε + δ`. Rationals embed as constant functions and limits
//! of Cauchy families are built with [`RegularReal::limit`]. Every other
//! operation is obtained by extending a rational map along the dense
//! embedding: Lipschitz maps through [`extension::lift_lipschitz`] and
//! non-expanding binary maps through [`extension::lift_nonexpanding2`].
//!
//! Equality of reals is never decided. Closeness and strict order are
//! semidecided under an explicit fuel budget; a `Yes`/`No` answer or a
//! witness is always sound, `Unknown` is always allowed.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod algebra;
mod error;
pub mod expr;
pub mod extension;
pub mod oracle;
pub mod order;
pub mod rational;
pub mod real;

pub use error::Error;
pub use rational::{PositiveRational, Rational};
pub use real::{CauchyApproximation, DistanceBounds, RegularReal, Verdict};
