//! Regular reals, limits of Cauchy families, and the closeness engine.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::rational::{PositiveRational, Rational};

type ApproxFn = dyn Fn(&PositiveRational) -> Rational + Send + Sync;
type FamilyFn = dyn Fn(&PositiveRational) -> RegularReal + Send + Sync;

/// A real number given by its rational approximants.
///
/// `approximate(ε)` is within `ε` of the denoted real, which makes any two
/// approximants satisfy `|x(ε) - x(δ)| <= ε + δ`. Values are immutable and
/// cheap to clone.
#[derive(Clone)]
pub struct RegularReal(Repr);

#[derive(Clone)]
enum Repr {
    Exact(Rational),
    Approx(Arc<ApproxFn>),
}

impl RegularReal {
    /// The embedding of a rational: the constant approximation.
    pub fn from_rational(q: Rational) -> Self {
        RegularReal(Repr::Exact(q))
    }

    /// Wraps an approximation function.
    ///
    /// The caller is responsible for regularity; [`RegularReal::check_regularity`]
    /// tests it on a finite set of precisions.
    pub fn from_fn<F>(approximate: F) -> Self
    where
        F: Fn(&PositiveRational) -> Rational + Send + Sync + 'static,
    {
        RegularReal(Repr::Approx(Arc::new(approximate)))
    }

    /// The limit of a Cauchy family, queried along the diagonal:
    /// `limit(x)(ε) = x(ε/2)(ε/2)`.
    pub fn limit(family: CauchyApproximation) -> Self {
        RegularReal::from_fn(move |eps| {
            let half = eps.half();
            family.at(&half).approximate(&half)
        })
    }

    pub fn approximate(&self, eps: &PositiveRational) -> Rational {
        match &self.0 {
            Repr::Exact(q) => q.clone(),
            Repr::Approx(f) => f(eps),
        }
    }

    /// `Some(q)` when this real was built directly from the rational `q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Exact(q) => Some(q),
            Repr::Approx(_) => None,
        }
    }

    /// First pair of precisions violating `|x(ε) - x(δ)| <= ε + δ`, if any.
    pub fn check_regularity(&self, precisions: &[PositiveRational]) -> Option<(PositiveRational, PositiveRational)> {
        let values: Vec<Rational> = precisions.iter().map(|e| self.approximate(e)).collect();
        for (i, (ei, vi)) in precisions.iter().zip(&values).enumerate() {
            for (ej, vj) in precisions.iter().zip(&values).skip(i + 1) {
                if vi.dist(vj) > ei.get() + ej.get() {
                    return Some((ei.clone(), ej.clone()));
                }
            }
        }
        None
    }
}

impl From<Rational> for RegularReal {
    fn from(q: Rational) -> Self {
        RegularReal::from_rational(q)
    }
}

impl fmt::Debug for RegularReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Exact(q) => write!(f, "RegularReal({q})"),
            Repr::Approx(_) => f.write_str("RegularReal(<approximation>)"),
        }
    }
}

/// A family `ε ↦ x_ε` of reals with `x_ε` and `x_δ` within `ε + δ`.
#[derive(Clone)]
pub struct CauchyApproximation(Arc<FamilyFn>);

impl CauchyApproximation {
    pub fn new<F>(at: F) -> Self
    where
        F: Fn(&PositiveRational) -> RegularReal + Send + Sync + 'static,
    {
        CauchyApproximation(Arc::new(at))
    }

    pub fn at(&self, eps: &PositiveRational) -> RegularReal {
        (self.0)(eps)
    }

    /// First pair `(ε, δ)` for which `x_ε` and `x_δ` are refutably farther
    /// apart than `ε + δ`, judged with slack `eta`.
    pub fn check_cauchy(
        &self,
        precisions: &[PositiveRational],
        eta: &PositiveRational,
    ) -> Option<(PositiveRational, PositiveRational)> {
        let members: Vec<RegularReal> = precisions.iter().map(|e| self.at(e)).collect();
        for (i, (ei, xi)) in precisions.iter().zip(&members).enumerate() {
            for (ej, xj) in precisions.iter().zip(&members).skip(i + 1) {
                if distance_bounds(xi, xj, eta).lower > ei.get() + ej.get() {
                    return Some((ei.clone(), ej.clone()));
                }
            }
        }
        None
    }
}

/// Rational enclosure `[lower, upper]` of `|u - v|` obtained with slack `η`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceBounds {
    pub lower: Rational,
    pub upper: Rational,
    pub slack: PositiveRational,
}

/// Encloses `|u - v|` using the approximants at `η`.
///
/// Each approximant is within `η` of its real, so with
/// `d = |u(η) - v(η)|` the distance lies in `[max(d - 2η, 0), d + 2η]`.
pub fn distance_bounds(u: &RegularReal, v: &RegularReal, eta: &PositiveRational) -> DistanceBounds {
    let d = u.approximate(eta).dist(&v.approximate(eta));
    let two_eta = eta.get() + eta.get();
    let lower = (&d - &two_eta).sup(&Rational::zero());
    DistanceBounds { lower, upper: d + two_eta, slack: eta.clone() }
}

/// Outcome of a semidecision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// A closeness verdict together with the last enclosure computed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CloseDecision {
    pub verdict: Verdict,
    pub bounds: Option<DistanceBounds>,
}

/// The precisions `base · 2^-k` for `k = 0..fuel`.
pub fn refinement_schedule(base: &PositiveRational, fuel: u32) -> impl Iterator<Item = PositiveRational> + '_ {
    (0..fuel).map(move |k| base.mul(&PositiveRational::pow2_neg(k)))
}

/// Semidecides `u ∼[ε] v`, i.e. `|u - v| < ε`.
///
/// Runs at most `fuel` rounds of [`distance_bounds`] over the precisions
/// `min(ε, 1) · 2^-k`. `Yes` means `upper < ε`, `No` means `lower >= ε`.
pub fn close_semidecide(u: &RegularReal, v: &RegularReal, eps: &PositiveRational, fuel: u32) -> CloseDecision {
    let base = eps.inf(&PositiveRational::one());
    let mut last = None;
    for eta in refinement_schedule(&base, fuel) {
        let bounds = distance_bounds(u, v, &eta);
        if &bounds.upper < eps.get() {
            return CloseDecision { verdict: Verdict::Yes, bounds: Some(bounds) };
        }
        if &bounds.lower >= eps.get() {
            return CloseDecision { verdict: Verdict::No, bounds: Some(bounds) };
        }
        last = Some(bounds);
    }
    CloseDecision { verdict: Verdict::Unknown, bounds: last }
}
