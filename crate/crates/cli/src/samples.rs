//! Seeded sample generators for the law suite and the tests.

use cauchy_reals::expr::{eval, Expr};
use cauchy_reals::oracle::exact_eval;
use cauchy_reals::{Rational, RegularReal};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A sample real together with the expression it was evaluated from, so the
/// interval oracle can check it.
#[derive(Clone, Debug)]
pub struct Sample {
    pub expr: Expr,
    pub value: RegularReal,
}

impl Sample {
    pub fn new(expr: Expr, fuel: u32) -> Option<Self> {
        let value = eval(&expr, fuel).ok()?;
        Some(Sample { expr, value })
    }
}

pub struct SampleGen {
    rng: ChaCha8Rng,
}

impl SampleGen {
    pub fn new(seed: u64) -> Self {
        SampleGen { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `n/d` with `|n| <= 60`, `1 <= d <= 24`.
    pub fn rational(&mut self) -> Rational {
        let n: i64 = self.rng.gen_range(-60..=60);
        let d: i64 = self.rng.gen_range(1..=24);
        Rational::ratio(n, d)
    }

    pub fn positive_rational(&mut self) -> Rational {
        let n: i64 = self.rng.gen_range(1..=80);
        let d: i64 = self.rng.gen_range(1..=12);
        Rational::ratio(n, d)
    }

    /// A rational with a large denominator, to exercise big integers.
    pub fn wide_rational(&mut self) -> Rational {
        let n = BigInt::from(self.rng.gen_range(-10_i64.pow(12)..=10_i64.pow(12)));
        let d = BigInt::from(self.rng.gen_range(1..=10_i64.pow(9)));
        Rational::new(n, d).expect("nonzero denominator")
    }

    /// A rational literal or the square root of a positive one.
    fn atom(&mut self) -> Expr {
        if self.rng.gen_bool(0.5) {
            Expr::Lit(self.rational())
        } else {
            Expr::sqrt(Expr::Lit(self.positive_rational()))
        }
    }

    /// Rationals, sqrt-built limits, and sums and products of those.
    pub fn real_expr(&mut self) -> Expr {
        match self.rng.gen_range(0..6) {
            0 => Expr::Lit(self.rational()),
            1 => Expr::Lit(self.wide_rational()),
            2 => Expr::sqrt(Expr::Lit(self.positive_rational())),
            3 => Expr::add(self.atom(), self.atom()),
            4 => Expr::mul(self.atom(), self.atom()),
            _ => Expr::add(Expr::mul(self.atom(), self.atom()), self.atom()),
        }
    }

    pub fn real(&mut self, fuel: u32) -> Sample {
        loop {
            if let Some(s) = Sample::new(self.real_expr(), fuel) {
                return s;
            }
        }
    }

    /// A closed expression without square roots, of depth at most
    /// `max_depth`, that never divides by zero.
    pub fn rational_expr(&mut self, max_depth: usize) -> Expr {
        loop {
            let e = self.rational_tree(max_depth);
            if exact_eval(&e).is_some() {
                return e;
            }
        }
    }

    fn rational_tree(&mut self, depth: usize) -> Expr {
        if depth == 0 || self.rng.gen_bool(0.25) {
            return Expr::Lit(self.rational());
        }
        let d = depth - 1;
        match self.rng.gen_range(0..9) {
            0 => Expr::neg(self.rational_tree(d)),
            1 => Expr::add(self.rational_tree(d), self.rational_tree(d)),
            2 => Expr::sub(self.rational_tree(d), self.rational_tree(d)),
            3 => Expr::mul(self.rational_tree(d), self.rational_tree(d)),
            4 => Expr::div(self.rational_tree(d), self.rational_tree(d)),
            5 => Expr::min(self.rational_tree(d), self.rational_tree(d)),
            6 => Expr::max(self.rational_tree(d), self.rational_tree(d)),
            7 => Expr::abs(self.rational_tree(d)),
            _ => Expr::recip(self.rational_tree(d)),
        }
    }

    /// Any expression over the full syntax, for printing round trips.
    pub fn any_expr(&mut self, max_depth: usize) -> Expr {
        if max_depth == 0 || self.rng.gen_bool(0.3) {
            return Expr::Lit(self.rational());
        }
        let d = max_depth - 1;
        match self.rng.gen_range(0..10) {
            0 => Expr::neg(self.any_expr(d)),
            1 => Expr::add(self.any_expr(d), self.any_expr(d)),
            2 => Expr::sub(self.any_expr(d), self.any_expr(d)),
            3 => Expr::mul(self.any_expr(d), self.any_expr(d)),
            4 => Expr::div(self.any_expr(d), self.any_expr(d)),
            5 => Expr::min(self.any_expr(d), self.any_expr(d)),
            6 => Expr::max(self.any_expr(d), self.any_expr(d)),
            7 => Expr::abs(self.any_expr(d)),
            8 => Expr::recip(self.any_expr(d)),
            _ => Expr::sqrt(self.any_expr(d)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_seed() {
        let a: Vec<String> = {
            let mut g = SampleGen::new(7);
            (0..20).map(|_| g.real_expr().to_string()).collect()
        };
        let b: Vec<String> = {
            let mut g = SampleGen::new(7);
            (0..20).map(|_| g.real_expr().to_string()).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn rational_exprs_are_bounded_and_defined() {
        let mut g = SampleGen::new(1);
        for _ in 0..200 {
            let e = g.rational_expr(6);
            assert!(e.depth() <= 6);
            assert!(exact_eval(&e).is_some());
        }
    }
}
