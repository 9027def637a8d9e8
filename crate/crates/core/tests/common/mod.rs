#![allow(dead_code)]

use cauchy_reals::expr::Expr;
use cauchy_reals::{PositiveRational, Rational};
use proptest::prelude::*;

pub fn rational() -> impl Strategy<Value = Rational> {
    (-200i64..=200, 1i64..=50).prop_map(|(n, d)| Rational::ratio(n, d))
}

pub fn positive() -> impl Strategy<Value = PositiveRational> {
    (1i64..=200, 1i64..=50).prop_map(|(n, d)| PositiveRational::ratio(n, d))
}

/// `10^-k` for `k` in `0..=12`.
pub fn precision() -> impl Strategy<Value = PositiveRational> {
    (0u32..=12).prop_map(PositiveRational::pow10_neg)
}

/// Expressions over rationals and square roots of positive rationals,
/// without division.
pub fn real_expr() -> impl Strategy<Value = Expr> {
    let leaf =
        prop_oneof![rational().prop_map(Expr::Lit), positive().prop_map(|p| Expr::sqrt(Expr::Lit(p.into_inner()))),];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Expr::neg),
            inner.clone().prop_map(Expr::abs),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::add(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::sub(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::mul(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Expr::min(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Expr::max(a, b)),
        ]
    })
}

/// Like [`real_expr`], but divisions by `1 + |·|` are allowed.
pub fn real_expr_with_division() -> impl Strategy<Value = Expr> {
    (real_expr(), real_expr()).prop_map(|(a, b)| Expr::div(a, Expr::add(Expr::lit(1), Expr::abs(b))))
}
