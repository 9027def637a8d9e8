//! Extending maps from the rationals to the reals.
//!
//! A map defined on rationals extends uniquely to the reals when it is
//! Lipschitz (unary) or non-expanding in each argument (binary). The
//! extension queries its argument at a precision scaled by the constant and
//! then queries the resulting real.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::rational::{PositiveRational, Rational};
use crate::real::{distance_bounds, RegularReal};

type RatToReal = dyn Fn(&Rational) -> RegularReal + Send + Sync;
type RatPair = dyn Fn(&Rational, &Rational) -> Rational + Send + Sync;
type RealToReal = dyn Fn(&RegularReal) -> RegularReal + Send + Sync;
type RealPair = dyn Fn(&RegularReal, &RegularReal) -> RegularReal + Send + Sync;

/// A map `ℚ → ℝ` with Lipschitz constant `L`:
/// `|q - r| < ε` implies `|f(q) - f(r)| < L·ε`.
#[derive(Clone)]
pub struct LipschitzMapQ {
    apply: Arc<RatToReal>,
    constant: PositiveRational,
}

impl LipschitzMapQ {
    pub fn new<F>(constant: PositiveRational, apply: F) -> Self
    where
        F: Fn(&Rational) -> RegularReal + Send + Sync + 'static,
    {
        LipschitzMapQ { apply: Arc::new(apply), constant }
    }

    pub fn apply(&self, q: &Rational) -> RegularReal {
        (self.apply)(q)
    }

    pub fn constant(&self) -> &PositiveRational {
        &self.constant
    }
}

/// A map `ℚ × ℚ → ℚ` that is non-expanding in each argument separately.
#[derive(Clone)]
pub struct NonexpandingMapQ2 {
    apply: Arc<RatPair>,
}

impl NonexpandingMapQ2 {
    pub fn new<F>(apply: F) -> Self
    where
        F: Fn(&Rational, &Rational) -> Rational + Send + Sync + 'static,
    {
        NonexpandingMapQ2 { apply: Arc::new(apply) }
    }

    pub fn apply(&self, q: &Rational, r: &Rational) -> Rational {
        (self.apply)(q, r)
    }
}

/// A map `ℝ → ℝ` tagged with its Lipschitz constant.
#[derive(Clone)]
pub struct LipschitzFn {
    map: Arc<RealToReal>,
    constant: PositiveRational,
}

impl LipschitzFn {
    pub fn new<F>(constant: PositiveRational, map: F) -> Self
    where
        F: Fn(&RegularReal) -> RegularReal + Send + Sync + 'static,
    {
        LipschitzFn { map: Arc::new(map), constant }
    }

    pub fn identity() -> Self {
        LipschitzFn::new(PositiveRational::one(), RegularReal::clone)
    }

    pub fn apply(&self, u: &RegularReal) -> RegularReal {
        (self.map)(u)
    }

    pub fn constant(&self) -> &PositiveRational {
        &self.constant
    }
}

/// A map `ℝ × ℝ → ℝ` tagged with a Lipschitz constant per argument.
#[derive(Clone)]
pub struct LipschitzFn2 {
    map: Arc<RealPair>,
    constants: (PositiveRational, PositiveRational),
}

impl LipschitzFn2 {
    pub fn new<F>(constants: (PositiveRational, PositiveRational), map: F) -> Self
    where
        F: Fn(&RegularReal, &RegularReal) -> RegularReal + Send + Sync + 'static,
    {
        LipschitzFn2 { map: Arc::new(map), constants }
    }

    pub fn apply(&self, u: &RegularReal, v: &RegularReal) -> RegularReal {
        (self.map)(u, v)
    }

    pub fn constants(&self) -> (&PositiveRational, &PositiveRational) {
        (&self.constants.0, &self.constants.1)
    }
}

/// How a unary lift divides its precision budget: the argument is queried at
/// `argument·ε/L` and the image at `output·ε`. Regularity needs
/// `argument + output <= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftSplit {
    argument: PositiveRational,
    output: PositiveRational,
}

impl LiftSplit {
    pub fn new(argument: PositiveRational, output: PositiveRational) -> Option<Self> {
        if argument.get() + output.get() <= Rational::one() {
            Some(LiftSplit { argument, output })
        } else {
            None
        }
    }
}

impl Default for LiftSplit {
    fn default() -> Self {
        LiftSplit { argument: PositiveRational::ratio(1, 4), output: PositiveRational::ratio(1, 2) }
    }
}

/// Extends an `L`-Lipschitz map `ℚ → ℝ` to an `L`-Lipschitz map `ℝ → ℝ`.
///
/// `f̄(u)(ε) = f(u(ε/4L))(ε/2)`. The total error is at most `3ε/4`. On an
/// exact rational input the result is `f(q)` itself.
pub fn lift_lipschitz(f: LipschitzMapQ) -> LipschitzFn {
    lift_lipschitz_with_split(f, LiftSplit::default())
}

pub fn lift_lipschitz_with_split(f: LipschitzMapQ, split: LiftSplit) -> LipschitzFn {
    let constant = f.constant.clone();
    let arg_scale = split.argument.div(&f.constant);
    LipschitzFn::new(constant, move |u| {
        if let Some(q) = u.as_rational() {
            return f.apply(q);
        }
        let (f, u, arg_scale, out_scale) = (f.clone(), u.clone(), arg_scale.clone(), split.output.clone());
        RegularReal::from_fn(move |eps| {
            let q = u.approximate(&eps.mul(&arg_scale));
            f.apply(&q).approximate(&eps.mul(&out_scale))
        })
    })
}

/// Extends a map `ℚ × ℚ → ℚ`, non-expanding in each argument, to the reals.
///
/// `f̄(u, v)(ε) = f(u(ε/4), v(ε/4))`.
pub fn lift_nonexpanding2(f: NonexpandingMapQ2) -> LipschitzFn2 {
    LipschitzFn2::new((PositiveRational::one(), PositiveRational::one()), move |u, v| {
        if let (Some(q), Some(r)) = (u.as_rational(), v.as_rational()) {
            return RegularReal::from_rational(f.apply(q, r));
        }
        let (f, u, v) = (f.clone(), u.clone(), v.clone());
        RegularReal::from_fn(move |eps| {
            let quarter = eps.div_int(4);
            f.apply(&u.approximate(&quarter), &v.approximate(&quarter))
        })
    })
}

/// `u ↦ h(f(u), g(u))`, Lipschitz with constant `N1·L + N2·M`.
pub fn compose_lipschitz2(f: &LipschitzFn, g: &LipschitzFn, h: &LipschitzFn2) -> LipschitzFn {
    let (n1, n2) = h.constants();
    let constant = n1.mul(&f.constant).add(&n2.mul(&g.constant));
    let (f, g, h) = (f.clone(), g.clone(), h.clone());
    LipschitzFn::new(constant, move |u| h.apply(&f.apply(u), &g.apply(u)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AgreementFailure {
    /// Approximants differ at a rational probe.
    Rational { probe: Rational, precision: PositiveRational, left: Rational, right: Rational },
    /// Distance upper bound at a real probe is not below the tolerance.
    Real { index: usize, upper: Rational },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AgreementReport {
    pub failures: Vec<AgreementFailure>,
}

impl AgreementReport {
    pub fn is_empty(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks that two extensions agree: approximants must be identical at the
/// rational probes (queried at `1`, `1/1000` and `ε`), and the distance upper
/// bound at each real probe must be below `ε`.
pub fn check_extension_agreement<F, G>(
    f: F,
    g: G,
    rational_probe: &[Rational],
    real_probe: &[RegularReal],
    eps: &PositiveRational,
) -> AgreementReport
where
    F: Fn(&RegularReal) -> RegularReal,
    G: Fn(&RegularReal) -> RegularReal,
{
    let precisions = [PositiveRational::one(), PositiveRational::pow10_neg(3), eps.clone()];
    let mut failures = Vec::new();
    for q in rational_probe {
        let point = RegularReal::from_rational(q.clone());
        let (fu, gu) = (f(&point), g(&point));
        for precision in &precisions {
            let (left, right) = (fu.approximate(precision), gu.approximate(precision));
            if left != right {
                failures.push(AgreementFailure::Rational {
                    probe: q.clone(),
                    precision: precision.clone(),
                    left,
                    right,
                });
            }
        }
    }
    let slack = eps.div_int(8);
    for (index, u) in real_probe.iter().enumerate() {
        let bounds = distance_bounds(&f(u), &g(u), &slack);
        if &bounds.upper >= eps.get() {
            failures.push(AgreementFailure::Real { index, upper: bounds.upper });
        }
    }
    AgreementReport { failures }
}
