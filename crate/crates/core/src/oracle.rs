//! Independent reference evaluation of expressions.
//!
//! [`exact_eval`] computes closed rational expressions exactly.
//! [`interval_eval`] encloses any expression in a rational interval of
//! prescribed width using interval arithmetic on exact endpoints and integer
//! square roots. Neither shares code with the extension-based evaluation in
//! [`crate::expr`].

use num_bigint::BigInt;

use crate::expr::Expr;
use crate::rational::{PositiveRational, Rational};
use crate::real::RegularReal;
use crate::Error;

/// Zero-exclusion attempts for a divisor before giving up.
const MAX_REFINEMENTS: u32 = 256;

/// `[lo, hi]` containing the true value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RationalInterval {
    pub fn point(q: Rational) -> Self {
        RationalInterval { lo: q.clone(), hi: q }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &Rational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    /// Largest absolute value in the interval.
    pub fn magnitude(&self) -> Rational {
        self.lo.abs().sup(&self.hi.abs())
    }

    fn intersect(&self, other: &RationalInterval) -> RationalInterval {
        let lo = self.lo.sup(&other.lo);
        let hi = self.hi.inf(&other.hi);
        // both enclose the same value, so they overlap
        debug_assert!(lo <= hi);
        RationalInterval { lo, hi }
    }

    fn excludes_zero(&self) -> bool {
        self.lo.is_positive() || self.hi.is_negative()
    }
}

/// Exact value of an expression without square roots, `None` if it contains
/// one or divides by zero.
pub fn exact_eval(e: &Expr) -> Option<Rational> {
    Some(match e {
        Expr::Lit(q) => q.clone(),
        Expr::Neg(a) => -exact_eval(a)?,
        Expr::Add(a, b) => exact_eval(a)? + exact_eval(b)?,
        Expr::Sub(a, b) => exact_eval(a)? - exact_eval(b)?,
        Expr::Mul(a, b) => exact_eval(a)? * exact_eval(b)?,
        Expr::Div(a, b) => exact_eval(a)?.checked_div(&exact_eval(b)?).ok()?,
        Expr::Min(a, b) => exact_eval(a)?.inf(&exact_eval(b)?),
        Expr::Max(a, b) => exact_eval(a)?.sup(&exact_eval(b)?),
        Expr::Abs(a) => exact_eval(a)?.abs(),
        Expr::Recip(a) => exact_eval(a)?.recip().ok()?,
        Expr::Sqrt(_) => return None,
    })
}

/// Encloses the value of `e` in an interval of width at most `2·precision`.
pub fn interval_eval(e: &Expr, precision: &PositiveRational) -> Result<RationalInterval, Error> {
    let i = enclose(e, precision)?;
    debug_assert!(i.width() <= precision.get() + precision.get());
    Ok(i)
}

fn enclose(e: &Expr, p: &PositiveRational) -> Result<RationalInterval, Error> {
    Ok(match e {
        Expr::Lit(q) => RationalInterval::point(q.clone()),
        Expr::Neg(a) => {
            let i = enclose(a, p)?;
            RationalInterval { lo: -i.hi, hi: -i.lo }
        }
        Expr::Add(a, b) => {
            let (x, y) = (enclose(a, &p.half())?, enclose(b, &p.half())?);
            RationalInterval { lo: x.lo + y.lo, hi: x.hi + y.hi }
        }
        Expr::Sub(a, b) => {
            let (x, y) = (enclose(a, &p.half())?, enclose(b, &p.half())?);
            RationalInterval { lo: x.lo - y.hi, hi: x.hi - y.lo }
        }
        Expr::Min(a, b) => {
            let (x, y) = (enclose(a, p)?, enclose(b, p)?);
            RationalInterval { lo: x.lo.inf(&y.lo), hi: x.hi.inf(&y.hi) }
        }
        Expr::Max(a, b) => {
            let (x, y) = (enclose(a, p)?, enclose(b, p)?);
            RationalInterval { lo: x.lo.sup(&y.lo), hi: x.hi.sup(&y.hi) }
        }
        Expr::Abs(a) => {
            let i = enclose(a, p)?;
            if i.lo.is_negative() && i.hi.is_positive() {
                RationalInterval { lo: Rational::zero(), hi: i.magnitude() }
            } else {
                let (x, y) = (i.lo.abs(), i.hi.abs());
                RationalInterval { lo: x.inf(&y), hi: x.sup(&y) }
            }
        }
        Expr::Mul(a, b) => product(&|q| enclose(a, q), &|q| enclose(b, q), p)?,
        Expr::Recip(a) => reciprocal(a, p)?,
        Expr::Div(a, b) => product(&|q| enclose(a, q), &|q| reciprocal(b, q), p)?,
        Expr::Sqrt(a) => {
            // √ is 1/2-Hölder: width(√I) <= √width(I)
            let half = p.half();
            let i = enclose(a, &half.mul(&half).half())?;
            if i.hi.is_negative() {
                return Err(Error::SqrtNegative);
            }
            let k = dyadic_exponent(&half);
            let lo = if i.lo.is_positive() { sqrt_floor(&i.lo, k) } else { Rational::zero() };
            RationalInterval { lo, hi: sqrt_ceil(&i.hi, k) }
        }
    })
}

type Encloser<'a> = dyn Fn(&PositiveRational) -> Result<RationalInterval, Error> + 'a;

/// Product enclosure: with `|a| <= A` and `|b| <= B`, the product of
/// enclosures of widths `wa`, `wb` has width at most `wa·B + A·wb`.
fn product(a: &Encloser<'_>, b: &Encloser<'_>, p: &PositiveRational) -> Result<RationalInterval, Error> {
    let one = PositiveRational::one();
    let (coarse_a, coarse_b) = (a(&one)?, b(&one)?);
    let ma = PositiveRational::new(coarse_a.magnitude() + Rational::one()).expect("positive");
    let mb = PositiveRational::new(coarse_b.magnitude() + Rational::one()).expect("positive");
    let x = a(&p.div(&mb).half())?.intersect(&coarse_a);
    let y = b(&p.div(&ma).half())?.intersect(&coarse_b);
    let corners = [&x.lo * &y.lo, &x.lo * &y.hi, &x.hi * &y.lo, &x.hi * &y.hi];
    let lo = corners.iter().min().expect("four corners").clone();
    let hi = corners.iter().max().expect("four corners").clone();
    Ok(RationalInterval { lo, hi })
}

/// `1/[lo, hi]` once refinement has pushed the enclosure off zero. If
/// `|x| >= m` on the enclosure, an input width `w` becomes at most `w/m²`.
fn reciprocal(a: &Expr, p: &PositiveRational) -> Result<RationalInterval, Error> {
    let mut coarse = None;
    for k in 0..MAX_REFINEMENTS {
        let i = enclose(a, &PositiveRational::pow2_neg(k))?;
        if i.excludes_zero() {
            coarse = Some(i);
            break;
        }
    }
    let coarse = coarse.ok_or(Error::Indeterminate)?;
    let m = PositiveRational::new(coarse.lo.abs().inf(&coarse.hi.abs())).expect("zero excluded");
    let fine = enclose(a, &p.mul(&m).mul(&m))?.intersect(&coarse);
    let lo = fine.hi.recip().expect("zero excluded");
    let hi = fine.lo.recip().expect("zero excluded");
    Ok(RationalInterval { lo, hi })
}

/// Smallest `k` with `2^-k <= p`.
fn dyadic_exponent(p: &PositiveRational) -> u32 {
    let mut k = 0;
    while Rational::pow2_neg(k) > *p.get() {
        k += 1;
    }
    k
}

/// Largest `n/2^k <= √x`: `n = isqrt(floor(x·4^k))`.
fn sqrt_floor(x: &Rational, k: u32) -> Rational {
    let scaled = (x * &Rational::from(BigInt::from(1) << (2 * k))).floor();
    Rational::new(scaled.sqrt(), BigInt::from(1) << k).expect("nonzero denominator")
}

/// Smallest `n/2^k >= √x`: the least `n` with `n² >= ceil(x·4^k)`.
fn sqrt_ceil(x: &Rational, k: u32) -> Rational {
    let scaled = (x * &Rational::from(BigInt::from(1) << (2 * k))).ceil();
    let mut n = scaled.sqrt();
    if &n * &n < scaled {
        n += 1;
    }
    Rational::new(n, BigInt::from(1) << k).expect("nonzero denominator")
}

/// `u(ε)` lies in `[lo - ε, hi + ε]`.
pub fn agree(u: &RegularReal, i: &RationalInterval, eps: &PositiveRational) -> bool {
    let a = u.approximate(eps);
    a >= &i.lo - eps.get() && a <= &i.hi + eps.get()
}
