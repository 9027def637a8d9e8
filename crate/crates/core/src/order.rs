//! Strict order: semidecision, weak linearity, rational separation and
//! apartness from zero.
//!
//! `u < v` holds exactly when `u + ε <= v` for some positive rational `ε`;
//! that `ε` is what an [`LtWitness`] carries. Every search refines the
//! probe precision over `2^-k`, `k = 0..fuel`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{add, ApartnessWitness};
use crate::expr::{eval, Expr};
use crate::oracle::interval_eval;
use crate::rational::{PositiveRational, Rational};
use crate::real::{close_semidecide, refinement_schedule, RegularReal, Verdict};
use crate::Error;

/// Certificate for `u < v`: at precision `probe`,
/// `v(probe) - u(probe) = epsilon + 2·probe`, which entails `u + epsilon <= v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtWitness {
    pub epsilon: PositiveRational,
    pub probe: PositiveRational,
}

impl LtWitness {
    /// Re-derives the certificate from the approximants.
    pub fn verify(&self, u: &RegularReal, v: &RegularReal) -> bool {
        let gap = v.approximate(&self.probe) - u.approximate(&self.probe);
        gap >= self.epsilon.get() + self.probe.get() + self.probe.get()
    }
}

/// One comparison round at precision `eta`.
pub fn lt_at(u: &RegularReal, v: &RegularReal, eta: &PositiveRational) -> Option<LtWitness> {
    let gap = v.approximate(eta) - u.approximate(eta);
    let margin = gap - (eta.get() + eta.get());
    PositiveRational::new(margin).ok().map(|epsilon| LtWitness { epsilon, probe: eta.clone() })
}

/// Searches for a witness of `u < v`. `None` is inconclusive.
pub fn lt_semidecide(u: &RegularReal, v: &RegularReal, fuel: u32) -> Option<LtWitness> {
    refinement_schedule(&PositiveRational::one(), fuel).find_map(|eta| lt_at(u, v, &eta))
}

/// The disjunct chosen by [`weak_linear`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Placement {
    /// `q < u`
    Above,
    /// `u < r`
    Below,
}

/// For `q < r`, decides one of `q < u` or `u < r`. Always terminates.
///
/// Splits `[q, r]` at thirds `s < t`, reads `u` at precision
/// `δ = min(s - q, r - t)/2` and compares against the midpoint of `s, t`.
/// Ties go to [`Placement::Below`].
pub fn weak_linear(q: &Rational, r: &Rational, u: &RegularReal) -> Result<Placement, Error> {
    let (s, t) = q.thirds(r)?;
    let delta1 = &s - q;
    let delta2 = r - &t;
    let delta = PositiveRational::new(delta1.inf(&delta2).half())?;
    let a = u.approximate(&delta);
    let mid = (&s + &t).half();
    Ok(if a > mid { Placement::Above } else { Placement::Below })
}

/// A rational strictly between `u` and `v`, given a witness for `u < v`:
/// `u(ε/4) + ε/2`.
pub fn between(u: &RegularReal, _v: &RegularReal, witness: &LtWitness) -> Rational {
    let eps = &witness.epsilon;
    u.approximate(&eps.div_int(4)) + eps.half().get()
}

/// Searches for a witness that `u` is apart from zero.
///
/// With `a = u(η)`, `a > 2η` gives `u >= a - η > a - 2η > 0`, so `a - 2η` is
/// a valid positive margin; symmetrically on the negative side.
pub fn apart_zero(u: &RegularReal, fuel: u32) -> Option<ApartnessWitness> {
    refinement_schedule(&PositiveRational::one(), fuel).find_map(|eta| {
        let a = u.approximate(&eta);
        let two_eta = eta.get() + eta.get();
        if let Ok(margin) = PositiveRational::new(&a - &two_eta) {
            Some(ApartnessWitness::positive(margin))
        } else {
            PositiveRational::new(-a - two_eta).ok().map(ApartnessWitness::negative)
        }
    })
}

/// A failed check from [`perturbation_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub sample: usize,
    pub epsilon: PositiveRational,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PerturbationReport {
    pub checks: usize,
    pub violations: Vec<Violation>,
}

/// Executable checks of the perturbation properties, for every sample `u` and
/// every `ε` of the grid:
///
/// * `u < u + ε` is witnessed within `fuel` rounds;
/// * with `v = u + ε/3` (so `u ∼[ε] v` once certified), `u + ε < v` is never
///   witnessed and the interval oracle never shows `v > u + ε`;
/// * with `w = u - ε/3` and the certified `u < u + ε`, `w < (u + ε) + ε` is
///   never refuted: `(u + ε) + ε < w` is never witnessed and the oracle never
///   shows `w >= u + 2ε`;
/// * a rational upper bound `u <= q` taken from the oracle transfers to
///   `v <= q + ε`.
pub fn perturbation_suite(samples: &[Expr], eps_grid: &[PositiveRational], fuel: u32) -> PerturbationReport {
    let mut report = PerturbationReport::default();
    for (index, sample) in samples.iter().enumerate() {
        let u = match eval(sample, fuel) {
            Ok(u) => u,
            Err(_) => continue,
        };
        for eps in eps_grid {
            let mut fail = |check: &'static str, detail: String| {
                report.violations.push(Violation { check, sample: index, epsilon: eps.clone(), detail });
            };
            let eps_expr = Expr::Lit(eps.get().clone());
            let shifted_expr = Expr::add(sample.clone(), eps_expr.clone());
            let shifted = add(&u, &RegularReal::from_rational(eps.get().clone()));

            report.checks += 1;
            match lt_semidecide(&u, &shifted, fuel) {
                Some(w) if w.verify(&u, &shifted) => {}
                Some(w) => fail("lt-perturb", format!("witness {w:?} does not verify")),
                None => fail("lt-perturb", String::from("no witness for u < u + eps")),
            }

            let third = eps.div_int(3).into_inner();
            let near_expr = Expr::add(sample.clone(), Expr::Lit(third.clone()));
            let near = add(&u, &RegularReal::from_rational(third.clone()));
            if close_semidecide(&u, &near, eps, fuel).verdict == Verdict::Yes {
                report.checks += 1;
                if lt_semidecide(&shifted, &near, fuel).is_some() {
                    fail("close-le", String::from("witnessed u + eps < v for eps-close v"));
                }
                if oracle_exceeds(&near_expr, &shifted_expr, &Rational::zero(), eps) {
                    fail("close-le", String::from("oracle shows v > u + eps"));
                }
                if let Ok(upper) = interval_eval(sample, &eps.div_int(16)).map(|i| i.hi) {
                    report.checks += 1;
                    let bound = Expr::Lit(&upper + eps.get());
                    if oracle_exceeds(&near_expr, &bound, &Rational::zero(), eps) {
                        fail("le-rational-perturb", format!("oracle shows v > {upper} + eps"));
                    }
                }
            }

            let below = Expr::sub(sample.clone(), Expr::Lit(third.clone()));
            let w = add(&u, &RegularReal::from_rational(-third));
            if lt_semidecide(&u, &shifted, fuel).is_some()
                && close_semidecide(&u, &w, eps, fuel).verdict == Verdict::Yes
            {
                report.checks += 1;
                let target = add(&shifted, &RegularReal::from_rational(eps.get().clone()));
                if lt_semidecide(&target, &w, fuel).is_some() {
                    fail("lt-close-add", String::from("witnessed v + eps < w"));
                }
                if lt_semidecide(&w, &target, fuel).is_none() {
                    fail("lt-close-add", String::from("no witness for w < v + eps"));
                }
                let target_expr = Expr::add(shifted_expr.clone(), eps_expr.clone());
                if oracle_at_least(&below, &target_expr, eps) {
                    fail("lt-close-add", String::from("oracle shows w >= v + eps"));
                }
            }
        }
    }
    report
}

/// Does the oracle prove `a > b + offset`?
fn oracle_exceeds(a: &Expr, b: &Expr, offset: &Rational, eps: &PositiveRational) -> bool {
    let precision = eps.div_int(64);
    match (interval_eval(a, &precision), interval_eval(b, &precision)) {
        (Ok(ia), Ok(ib)) => ia.lo > ib.hi + offset,
        _ => false,
    }
}

/// Does the oracle prove `a >= b`?
fn oracle_at_least(a: &Expr, b: &Expr, eps: &PositiveRational) -> bool {
    let precision = eps.div_int(64);
    match (interval_eval(a, &precision), interval_eval(b, &precision)) {
        (Ok(ia), Ok(ib)) => ia.lo >= ib.hi,
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Side;
    use crate::expr::sqrt;
    use alloc::vec;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn p(s: &str) -> PositiveRational {
        s.parse().unwrap()
    }

    fn r(s: &str) -> RegularReal {
        RegularReal::from_rational(q(s))
    }

    #[test]
    fn lt_examples() {
        let w = lt_semidecide(&r("0"), &r("1"), 10).unwrap();
        // η = 1 and η = 1/2 fail (1 > 2η is false), η = 1/4 succeeds
        assert_eq!(w.probe, p("1/4"));
        assert_eq!(w.epsilon, p("1/2"));
        assert!(w.epsilon.get() >= &(q("1") - q("2") * w.probe.get()));
        assert!(w.verify(&r("0"), &r("1")));
        for fuel in [0, 1, 10, 60] {
            assert_eq!(lt_semidecide(&r("5/3"), &r("5/3"), fuel), None);
            assert_eq!(lt_semidecide(&r("1"), &r("0"), fuel), None);
        }
    }

    #[test]
    fn weak_linearity_traces() {
        assert_eq!(weak_linear(&q("0"), &q("1"), &r("9/10")).unwrap(), Placement::Above);
        assert_eq!(weak_linear(&q("0"), &q("1"), &r("1/10")).unwrap(), Placement::Below);
        assert_eq!(weak_linear(&q("-1"), &q("1"), &r("0")).unwrap(), Placement::Below);
        assert_eq!(weak_linear(&q("1"), &q("1"), &r("0")), Err(Error::EmptyRange));
        assert_eq!(weak_linear(&q("2"), &q("1"), &r("0")), Err(Error::EmptyRange));
    }

    #[test]
    fn weak_linearity_on_sqrt2() {
        let u = sqrt(&r("2"));
        // midpoints of the thirds: 1.25 and 1.65
        assert_eq!(weak_linear(&q("1.0"), &q("1.5"), &u).unwrap(), Placement::Above);
        assert_eq!(weak_linear(&q("1.3"), &q("2.0"), &u).unwrap(), Placement::Below);
        // u is inside (1.41, 1.42); either answer is sound
        weak_linear(&q("1.41"), &q("1.42"), &u).unwrap();
    }

    #[test]
    fn between_examples() {
        let w = LtWitness { epsilon: p("1"), probe: p("1/4") };
        assert_eq!(between(&r("0"), &r("1"), &w), q("1/2"));
        let w = LtWitness { epsilon: p("2"), probe: p("1/4") };
        let m = between(&r("-1"), &r("1"), &w);
        assert_eq!(m, q("0"));
        assert!(q("-1") < m && m < q("1"));
    }

    #[test]
    fn apartness() {
        let w = apart_zero(&r("1"), 10).unwrap();
        assert_eq!(w.side, Side::Positive);
        // η = 1/4 is the first with 1 > 2η
        assert_eq!(w.margin, p("1/2"));
        assert!(w.plausible_for(&r("1")));
        for fuel in [0, 1, 30, 80] {
            assert_eq!(apart_zero(&r("0"), fuel), None);
        }
        let w = apart_zero(&r("-3"), 10).unwrap();
        assert_eq!(w.side, Side::Negative);
        assert!(w.plausible_for(&r("-3")));
        let w = apart_zero(&sqrt(&r("2")), 10).unwrap();
        assert!(w.plausible_for(&sqrt(&r("2"))));
    }

    #[test]
    fn apartness_fuel_monotone() {
        let tiny = r("1/1000000");
        assert_eq!(apart_zero(&tiny, 10), None);
        let first = apart_zero(&tiny, 22).unwrap();
        assert_eq!(apart_zero(&tiny, 40).unwrap(), first);
    }

    #[test]
    fn strict_translation() {
        let (u, v, a) = (sqrt(&r("2")), r("3/2"), q("-7/3"));
        let w = lt_semidecide(&u, &v, 30).unwrap();
        assert!(w.verify(&u, &v));
        let shift = RegularReal::from_rational(a.clone());
        let (au, av) = (add(&shift, &u), add(&shift, &v));
        // addition reads its arguments at a quarter of the precision, so the
        // translated gap at 4η is the original gap at η, exactly
        let wide = w.probe.mul(&p("4"));
        assert_eq!(av.approximate(&wide) - au.approximate(&wide), v.approximate(&w.probe) - u.approximate(&w.probe));
        let translated = lt_semidecide(&au, &av, 40).unwrap();
        assert!(translated.verify(&au, &av));
        assert!(lt_semidecide(&av, &au, 40).is_none());
    }

    #[test]
    fn perturbation_examples() {
        let samples = vec![Expr::Lit(q("0")), Expr::Lit(q("-5/2")), Expr::sqrt(Expr::Lit(q("2")))];
        let grid = vec![p("1"), p("1/1000"), PositiveRational::pow10_neg(6)];
        let report = perturbation_suite(&samples, &grid, 30);
        assert!(report.violations.is_empty(), "{:?}", report.violations);
        assert!(report.checks >= samples.len() * grid.len() * 3);
    }
}
