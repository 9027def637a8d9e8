//! Exact rationals and the positive rationals used as precisions.
//!
//! [`Rational`] wraps `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator, so structural equality is value
//! equality.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};

use crate::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: BigInt, denominator: BigInt) -> Result<Self, Error> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numerator, denominator)))
    }

    /// `n / d` from machine integers.
    ///
    /// Panics if `d == 0`; intended for constants.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn from_integer(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    /// `2^-k`
    pub fn pow2_neg(k: u32) -> Self {
        Rational(BigRational::new(BigInt::one(), BigInt::one() << k))
    }

    /// `10^-k`
    pub fn pow10_neg(k: u32) -> Self {
        Rational(BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), k as usize)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// `|self - other|`
    pub fn dist(&self, other: &Rational) -> Self {
        (self - other).abs()
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Self, Error> {
        Ok(self * &other.recip()?)
    }

    pub fn sup(&self, other: &Rational) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn inf(&self, other: &Rational) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// `-ε < self - other < ε`
    pub fn close(&self, other: &Rational, eps: &PositiveRational) -> bool {
        &self.dist(other) < eps.get()
    }

    /// Trisection points `(s, t)` with `self < s < t < upper`.
    pub fn thirds(&self, upper: &Rational) -> Result<(Rational, Rational), Error> {
        if self >= upper {
            return Err(Error::EmptyRange);
        }
        let third = (upper - self) * Rational::ratio(1, 3);
        let s = self + &third;
        let t = &s + &third;
        Ok((s, t))
    }

    pub fn half(&self) -> Self {
        self * &Rational::ratio(1, 2)
    }

    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Nearest integer, ties away from zero.
    pub fn round_half_away(&self) -> BigInt {
        self.0.round().to_integer()
    }

    pub fn cmp_zero(&self) -> Ordering {
        self.0.cmp(&BigRational::zero())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Canonical form: `"-3/4"`, `"5"`, `"0"`.
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_digits(s: &str) -> Result<BigInt, Error> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse("expected decimal digits"));
    }
    BigInt::from_str_radix(s, 10).map_err(|_| Error::Parse("expected decimal digits"))
}

/// Accepts `"a/b"`, integers and finite decimals such as `"-1.25"`.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self, Error> {
        let text = text.trim();
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text.strip_prefix('+').unwrap_or(text)),
        };
        let value = if let Some((num, den)) = body.split_once('/') {
            let den = parse_digits(den)?;
            if den.is_zero() {
                return Err(Error::Parse("zero denominator"));
            }
            Rational::new(parse_digits(num)?, den)?
        } else if let Some((int, frac)) = body.split_once('.') {
            if int.is_empty() && frac.is_empty() {
                return Err(Error::Parse("expected decimal digits"));
            }
            let int = if int.is_empty() { BigInt::zero() } else { parse_digits(int)? };
            let frac_value = if frac.is_empty() { BigInt::zero() } else { parse_digits(frac)? };
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            Rational::new(int * &scale + frac_value, scale)?
        } else {
            Rational::from_integer(parse_digits(body)?)
        };
        Ok(if negative { -value } else { value })
    }
}

/// A strictly positive rational: precisions, closeness radii, Lipschitz
/// constants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositiveRational(Rational);

impl PositiveRational {
    pub fn new(value: Rational) -> Result<Self, Error> {
        if value.is_positive() {
            Ok(PositiveRational(value))
        } else {
            Err(Error::NotPositive)
        }
    }

    /// Panics unless `n / d > 0`; intended for constants.
    pub fn ratio(n: i64, d: i64) -> Self {
        PositiveRational::new(Rational::ratio(n, d)).expect("positive constant")
    }

    pub fn one() -> Self {
        PositiveRational(Rational::one())
    }

    pub fn pow2_neg(k: u32) -> Self {
        PositiveRational(Rational::pow2_neg(k))
    }

    pub fn pow10_neg(k: u32) -> Self {
        PositiveRational(Rational::pow10_neg(k))
    }

    pub fn get(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }

    pub fn half(&self) -> Self {
        PositiveRational(self.0.half())
    }

    pub fn mul(&self, other: &PositiveRational) -> Self {
        PositiveRational(&self.0 * &other.0)
    }

    pub fn div(&self, other: &PositiveRational) -> Self {
        PositiveRational(&self.0 * &other.0.recip().expect("positive"))
    }

    pub fn div_int(&self, n: u32) -> Self {
        assert!(n > 0);
        PositiveRational(&self.0 * &Rational::ratio(1, n as i64))
    }

    pub fn add(&self, other: &PositiveRational) -> Self {
        PositiveRational(&self.0 + &other.0)
    }

    pub fn recip(&self) -> Self {
        PositiveRational(self.0.recip().expect("positive"))
    }

    pub fn inf(&self, other: &PositiveRational) -> Self {
        PositiveRational(self.0.inf(&other.0))
    }

    pub fn sup(&self, other: &PositiveRational) -> Self {
        PositiveRational(self.0.sup(&other.0))
    }

    /// `self - other` when that is still positive.
    pub fn checked_sub(&self, other: &Rational) -> Option<Self> {
        PositiveRational::new(&self.0 - other).ok()
    }
}

impl fmt::Display for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for PositiveRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for PositiveRational {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        PositiveRational::new(s.parse()?)
    }
}

impl From<PositiveRational> for Rational {
    fn from(p: PositiveRational) -> Rational {
        p.0
    }
}
