//! Field operations on [`RegularReal`].
//!
//! Negation, scaling by a rational and the clamped reciprocal come from
//! [`lift_lipschitz`]; addition, `min` and `max` from [`lift_nonexpanding2`].
//! Multiplication is built in two extension steps: `q ↦ q·v` for rational
//! `q` is Lipschitz with constant `L` once `|v| <= L`, and the bound `L` is
//! chosen deterministically from `v` itself.

use crate::extension::{lift_lipschitz, lift_nonexpanding2, LipschitzFn, LipschitzMapQ, NonexpandingMapQ2};
use crate::rational::{PositiveRational, Rational};
use crate::real::RegularReal;

pub fn neg(u: &RegularReal) -> RegularReal {
    lift_lipschitz(LipschitzMapQ::new(PositiveRational::one(), |q| RegularReal::from_rational(-q))).apply(u)
}

pub fn add(u: &RegularReal, v: &RegularReal) -> RegularReal {
    lift_nonexpanding2(NonexpandingMapQ2::new(|q, r| q + r)).apply(u, v)
}

pub fn sub(u: &RegularReal, v: &RegularReal) -> RegularReal {
    add(u, &neg(v))
}

pub fn rmax(u: &RegularReal, v: &RegularReal) -> RegularReal {
    lift_nonexpanding2(NonexpandingMapQ2::new(|q, r| q.sup(r))).apply(u, v)
}

pub fn rmin(u: &RegularReal, v: &RegularReal) -> RegularReal {
    lift_nonexpanding2(NonexpandingMapQ2::new(|q, r| q.inf(r))).apply(u, v)
}

/// `max(u, -u)`
pub fn rabs(u: &RegularReal) -> RegularReal {
    rmax(u, &neg(u))
}

/// Lipschitz constant of `r ↦ q·r`: `max(|q|, 1)`.
pub fn scale_constant(q: &Rational) -> PositiveRational {
    PositiveRational::new(q.abs().sup(&Rational::one())).expect("max with one is positive")
}

/// The extension of `r ↦ q·r`.
pub fn scale_map(q: &Rational) -> LipschitzFn {
    let factor = q.clone();
    lift_lipschitz(LipschitzMapQ::new(scale_constant(q), move |r| RegularReal::from_rational(&factor * r)))
}

pub fn scale_rational(q: &Rational, u: &RegularReal) -> RegularReal {
    scale_map(q).apply(u)
}

/// A positive rational `L` with `|v| <= L - 1`.
///
/// `v(1)` is within 1 of `v`, so `L = |v(1)| + 2` works.
pub fn bound_above(v: &RegularReal) -> PositiveRational {
    let l = v.approximate(&PositiveRational::one()).abs() + Rational::from(2);
    PositiveRational::new(l).expect("at least two")
}

/// Right multiplication by `v`, valid when `|v| <= bound`.
///
/// Extends `q ↦ q·v` (itself an extension in `v`), which is Lipschitz with
/// constant `bound`.
pub fn bounded_mul(bound: &PositiveRational, v: &RegularReal) -> LipschitzFn {
    let v = v.clone();
    lift_lipschitz(LipschitzMapQ::new(bound.clone(), move |q| scale_rational(q, &v)))
}

/// Product of two reals.
///
/// In `u` it is Lipschitz with constant `bound_above(v)`. In `v`, for fixed
/// `u`, `|u·v - u·v'| = |u|·|v - v'| <= bound_above(u)·|v - v'|`, so
/// `δ = ε / bound_above(u)` is a modulus of continuity.
pub fn mul(u: &RegularReal, v: &RegularReal) -> RegularReal {
    bounded_mul(&bound_above(v), v).apply(u)
}

/// `q ↦ 1 / max(q, δ)` extended to the reals; Lipschitz with constant `1/δ²`.
pub fn recip_clamped(delta: &PositiveRational) -> LipschitzFn {
    let floor = delta.get().clone();
    let constant = delta.mul(delta).recip();
    lift_lipschitz(LipschitzMapQ::new(constant, move |q| {
        RegularReal::from_rational(q.sup(&floor).recip().expect("clamped above zero"))
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Positive,
    Negative,
}

/// Evidence that a real is apart from zero: `δ <= u` (positive side) or
/// `u <= -δ` (negative side).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ApartnessWitness {
    pub side: Side,
    pub margin: PositiveRational,
}

impl ApartnessWitness {
    pub fn positive(margin: PositiveRational) -> Self {
        ApartnessWitness { side: Side::Positive, margin }
    }

    pub fn negative(margin: PositiveRational) -> Self {
        ApartnessWitness { side: Side::Negative, margin }
    }

    /// Necessary condition for validity: `u(δ/2) >= δ/2` on the positive
    /// side, `u(δ/2) <= -δ/2` on the negative side.
    pub fn plausible_for(&self, u: &RegularReal) -> bool {
        let half = self.margin.half();
        let a = u.approximate(&half);
        match self.side {
            Side::Positive => &a >= half.get(),
            Side::Negative => a <= -half.get(),
        }
    }
}

/// Reciprocal of a real given a witness that it is apart from zero.
pub fn recip(u: &RegularReal, witness: &ApartnessWitness) -> RegularReal {
    let clamped = recip_clamped(&witness.margin);
    match witness.side {
        Side::Positive => clamped.apply(u),
        Side::Negative => neg(&clamped.apply(&neg(u))),
    }
}
