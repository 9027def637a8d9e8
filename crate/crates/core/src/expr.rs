//! Closed arithmetic expressions and their evaluation to regular reals.

use alloc::boxed::Box;
use core::fmt;

use crate::algebra::{add, mul, neg, rabs, recip, rmax, rmin, sub};
use crate::order::{apart_zero, lt_at};
use crate::rational::{PositiveRational, Rational};
use crate::real::{refinement_schedule, CauchyApproximation, RegularReal};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Lit(Rational),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Min(Box<Expr>, Box<Expr>),
    Max(Box<Expr>, Box<Expr>),
    Abs(Box<Expr>),
    Recip(Box<Expr>),
    Sqrt(Box<Expr>),
}

impl Expr {
    pub fn lit(q: impl Into<Rational>) -> Expr {
        Expr::Lit(q.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(a: Expr) -> Expr {
        Expr::Neg(Box::new(a))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn add(a: Expr, b: Expr) -> Expr {
        Expr::Add(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn sub(a: Expr, b: Expr) -> Expr {
        Expr::Sub(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(a: Expr, b: Expr) -> Expr {
        Expr::Mul(Box::new(a), Box::new(b))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(a: Expr, b: Expr) -> Expr {
        Expr::Div(Box::new(a), Box::new(b))
    }

    pub fn min(a: Expr, b: Expr) -> Expr {
        Expr::Min(Box::new(a), Box::new(b))
    }

    pub fn max(a: Expr, b: Expr) -> Expr {
        Expr::Max(Box::new(a), Box::new(b))
    }

    pub fn abs(a: Expr) -> Expr {
        Expr::Abs(Box::new(a))
    }

    pub fn recip(a: Expr) -> Expr {
        Expr::Recip(Box::new(a))
    }

    pub fn sqrt(a: Expr) -> Expr {
        Expr::Sqrt(Box::new(a))
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Lit(_) => 0,
            Expr::Neg(a) | Expr::Abs(a) | Expr::Recip(a) | Expr::Sqrt(a) => 1 + a.depth(),
            Expr::Add(a, b)
            | Expr::Sub(a, b)
            | Expr::Mul(a, b)
            | Expr::Div(a, b)
            | Expr::Min(a, b)
            | Expr::Max(a, b) => 1 + a.depth().max(b.depth()),
        }
    }
}

/// Fully parenthesized form. Literals print canonically without spaces
/// (`-3/4`); division prints as ` / ` so the two stay distinguishable.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Lit(q) => write!(f, "{q}"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Min(a, b) => write!(f, "min({a}, {b})"),
            Expr::Max(a, b) => write!(f, "max({a}, {b})"),
            Expr::Abs(a) => write!(f, "abs({a})"),
            Expr::Recip(a) => write!(f, "recip({a})"),
            Expr::Sqrt(a) => write!(f, "sqrt({a})"),
        }
    }
}

/// Evaluates an expression; divisions search for an apartness witness with
/// the given fuel.
pub fn eval(e: &Expr, fuel: u32) -> Result<RegularReal, Error> {
    Ok(match e {
        Expr::Lit(q) => RegularReal::from_rational(q.clone()),
        Expr::Neg(a) => neg(&eval(a, fuel)?),
        Expr::Add(a, b) => add(&eval(a, fuel)?, &eval(b, fuel)?),
        Expr::Sub(a, b) => sub(&eval(a, fuel)?, &eval(b, fuel)?),
        Expr::Mul(a, b) => mul(&eval(a, fuel)?, &eval(b, fuel)?),
        Expr::Div(a, b) => {
            let numerator = eval(a, fuel)?;
            let denominator = eval(b, fuel)?;
            let witness = apart_zero(&denominator, fuel).ok_or(Error::ApartnessFuel)?;
            mul(&numerator, &recip(&denominator, &witness))
        }
        Expr::Min(a, b) => rmin(&eval(a, fuel)?, &eval(b, fuel)?),
        Expr::Max(a, b) => rmax(&eval(a, fuel)?, &eval(b, fuel)?),
        Expr::Abs(a) => rabs(&eval(a, fuel)?),
        Expr::Recip(a) => {
            let u = eval(a, fuel)?;
            let witness = apart_zero(&u, fuel).ok_or(Error::ApartnessFuel)?;
            recip(&u, &witness)
        }
        Expr::Sqrt(a) => {
            let u = eval(a, fuel)?;
            if refutably_negative(&u, fuel) {
                return Err(Error::SqrtNegative);
            }
            sqrt(&u)
        }
    })
}

/// Stops at the first round that certifies either `u < 0` or `0 < u`.
fn refutably_negative(u: &RegularReal, fuel: u32) -> bool {
    if let Some(q) = u.as_rational() {
        return q.is_negative();
    }
    let zero = RegularReal::from_rational(Rational::zero());
    for eta in refinement_schedule(&PositiveRational::one(), fuel) {
        if lt_at(u, &zero, &eta).is_some() {
            return true;
        }
        if lt_at(&zero, u, &eta).is_some() {
            return false;
        }
    }
    false
}

/// Square root of a nonnegative real, built as a limit.
///
/// The member at precision `ε` is the Newton root of `max(u(ε²/4), 0)` to
/// within `ε/2`; since `|√a - √b| <= √|a - b|`, it is within `ε` of `√u`.
/// Negative inputs are clamped to zero.
pub fn sqrt(u: &RegularReal) -> RegularReal {
    if let Some(q) = u.as_rational() {
        if q.is_zero() || q.is_negative() {
            return RegularReal::from_rational(Rational::zero());
        }
    }
    let u = u.clone();
    RegularReal::limit(CauchyApproximation::new(move |eps| {
        let half = eps.half();
        let a = u.approximate(&half.mul(&half)).sup(&Rational::zero());
        RegularReal::from_rational(newton_sqrt(&a, &half))
    }))
}

/// A rational within `tol` of `√a`, for `a >= 0`.
///
/// Iterates `x ← (x + a/x)/2` from `max(a, 1)`, rounding each iterate up to
/// the dyadic grid `2^-k <= tol/4`. Iterates stay `>= √a`, so
/// `x - √a <= (x² - a)/x` bounds the error.
fn newton_sqrt(a: &Rational, tol: &PositiveRational) -> Rational {
    if a.is_zero() {
        return Rational::zero();
    }
    let quarter = tol.div_int(4);
    let mut k = 0u32;
    while Rational::pow2_neg(k) > *quarter.get() {
        k += 1;
    }
    let grid = Rational::pow2_neg(k);
    let round_up = |x: &Rational| -> Rational {
        let steps = (x * &grid.recip().expect("grid is positive")).ceil();
        Rational::from(steps) * &grid
    };
    let mut x = round_up(&a.sup(&Rational::one()));
    loop {
        let excess = (&x * &x - a).checked_div(&x).expect("iterate is positive");
        if &excess <= tol.get() {
            return x;
        }
        let quotient = a.checked_div(&x).expect("iterate is positive");
        x = round_up(&(&x + &quotient).half());
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;
    use num_bigint::BigInt;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(s: &str) -> PositiveRational {
        s.parse().unwrap()
    }

    /// floor and ceil of sqrt(n) on the grid 10^-digits.
    fn isqrt_window(n: &Rational, digits: u32) -> (Rational, Rational) {
        let scale = BigInt::from(10).pow(digits);
        let scaled = (n * &Rational::from_integer(&scale * &scale)).floor();
        let lo = scaled.sqrt();
        (Rational::new(lo.clone(), scale.clone()).unwrap(), Rational::new(lo + 1, scale).unwrap())
    }

    #[test]
    fn newton_error_is_tracked() {
        for a in ["2", "1/3", "10000000000", "1/1000000007", "9", "0"] {
            let a = q(a);
            for tol in [p("1"), p("1/1000"), PositiveRational::pow10_neg(20)] {
                let x = newton_sqrt(&a, &tol);
                let (lo, hi) = isqrt_window(&a, 25);
                assert!(x >= &lo - tol.get() && x <= &hi + tol.get(), "sqrt({a}) at {tol}: {x}");
            }
        }
    }

    #[test]
    fn sqrt_is_regular() {
        let grid = vec![p("1"), p("1/7"), p("1/1000"), PositiveRational::pow10_neg(15)];
        let root = sqrt(&RegularReal::from_rational(q("2")));
        assert_eq!(root.check_regularity(&grid), None);
        let nested = sqrt(&add(&root, &RegularReal::from_rational(q("1/2"))));
        assert_eq!(nested.check_regularity(&grid), None);
    }

    #[test]
    fn eval_examples() {
        let e = Expr::add(Expr::lit(2), Expr::lit(2));
        for eps in [p("1"), PositiveRational::pow10_neg(9)] {
            assert_eq!(eval(&e, 10).unwrap().approximate(&eps), q("4"));
        }
        let zero_div = Expr::div(Expr::lit(1), Expr::sub(Expr::lit(1), Expr::lit(1)));
        assert_eq!(eval(&zero_div, 60).unwrap_err(), Error::ApartnessFuel);
        let root = eval(&Expr::sqrt(Expr::lit(2)), 10).unwrap();
        let eps = PositiveRational::pow10_neg(6);
        let (lo, hi) = isqrt_window(&q("2"), 12);
        let a = root.approximate(&eps);
        assert!(a >= &lo - eps.get() && a <= &hi + eps.get());
        assert_eq!(eval(&Expr::sqrt(Expr::lit(-1)), 10).unwrap_err(), Error::SqrtNegative);
        let negative = Expr::sub(Expr::sqrt(Expr::lit(2)), Expr::lit(2));
        assert_eq!(eval(&Expr::sqrt(negative), 10).unwrap_err(), Error::SqrtNegative);
    }

    #[test]
    fn rational_expressions_are_exact() {
        // (3/4 - 1/6) / (2 * -5) = (7/12) / -10 = -7/120
        let e = Expr::div(Expr::sub(Expr::Lit(q("3/4")), Expr::Lit(q("1/6"))), Expr::mul(Expr::lit(2), Expr::lit(-5)));
        let u = eval(&e, 10).unwrap();
        for eps in [p("1"), p("1/1000"), PositiveRational::pow10_neg(9)] {
            assert_eq!(u.approximate(&eps), q("-7/120"));
        }
        let e = Expr::recip(Expr::max(Expr::abs(Expr::lit(-4)), Expr::min(Expr::lit(1), Expr::lit(9))));
        assert_eq!(eval(&e, 10).unwrap().approximate(&p("1")), q("1/4"));
    }

    #[test]
    fn display_forms() {
        let e = Expr::sub(Expr::max(Expr::lit(1), Expr::lit(3)), Expr::Lit(q("1/2")));
        assert_eq!(e.to_string(), "(max(1, 3) - 1/2)");
        let e = Expr::neg(Expr::div(Expr::Lit(q("-3/4")), Expr::sqrt(Expr::lit(2))));
        assert_eq!(e.to_string(), "-((-3/4 / sqrt(2)))");
        assert_eq!(e.depth(), 3);
    }
}
