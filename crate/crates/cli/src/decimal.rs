//! Decimal rendering with a guaranteed error bound.

use cauchy_reals::{PositiveRational, Rational, RegularReal};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Renders `u` with `digits` fractional digits.
///
/// Queries `u` at `10^-(digits+1)` and rounds half away from zero, so the
/// printed value is within `0.6·10^-digits` of `u`. Zero never carries a sign.
pub fn print_decimal(u: &RegularReal, digits: u32) -> String {
    assert!(digits >= 1, "at least one fractional digit");
    let approximant = u.approximate(&PositiveRational::pow10_neg(digits + 1));
    format_scaled(&round_scaled(&approximant, digits), digits)
}

/// `round(q·10^digits)`, ties away from zero.
pub fn round_scaled(q: &Rational, digits: u32) -> BigInt {
    let scale = Rational::from_integer(num_traits::pow(BigInt::from(10), digits as usize));
    (q * &scale).round_half_away()
}

/// Formats the integer `n` as `n / 10^digits` in positional notation.
pub fn format_scaled(n: &BigInt, digits: u32) -> String {
    let width = digits as usize;
    let mut body = n.abs().to_string();
    if body.len() <= width {
        body = format!("{}{body}", "0".repeat(width + 1 - body.len()));
    }
    let (int, frac) = body.split_at(body.len() - width);
    let sign = if n.is_negative() && !n.is_zero() { "-" } else { "" };
    format!("{sign}{int}.{frac}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RegularReal {
        RegularReal::from_rational(s.parse().unwrap())
    }

    #[test]
    fn examples() {
        assert_eq!(print_decimal(&r("1/3"), 4), "0.3333");
        assert_eq!(print_decimal(&r("2"), 3), "2.000");
        assert_eq!(print_decimal(&r("-2/3"), 2), "-0.67");
        assert_eq!(print_decimal(&r("-1/1000"), 2), "0.00");
        assert_eq!(print_decimal(&r("1/200"), 2), "0.01");
        assert_eq!(print_decimal(&r("-1/200"), 2), "-0.01");
        assert_eq!(print_decimal(&r("12345/100"), 1), "123.5");
    }

    #[test]
    fn sqrt2_within_guarantee() {
        let root = cauchy_reals::expr::sqrt(&r("2"));
        let s = print_decimal(&root, 6);
        assert!(s == "1.414214" || s == "1.414213", "{s}");
    }
}
