//! The ordered-field law suite.
//!
//! Every law is checked on seeded samples. Equalities are observational: two
//! reals pass when their distance is certified below `ε` from approximants
//! at `ε/10`. Order laws use the semidecisions and, where they claim strict
//! inequalities, the interval oracle.

use std::fmt;

use cauchy_reals::algebra::{self, ApartnessWitness};
use cauchy_reals::expr::Expr;
use cauchy_reals::extension::LipschitzFn;
use cauchy_reals::oracle::{exact_eval, interval_eval, RationalInterval};
use cauchy_reals::order::{apart_zero, between, lt_semidecide, weak_linear, LtWitness, Placement};
use cauchy_reals::real::{close_semidecide, distance_bounds};
use cauchy_reals::{PositiveRational, Rational, RegularReal, Verdict};
use rand::Rng;

use crate::decimal::{format_scaled, round_scaled};
use crate::samples::{Sample, SampleGen};

/// The operations under test. Swapping one out is how the suite is itself
/// tested.
#[derive(Clone, Copy)]
pub struct Ops {
    pub neg: fn(&RegularReal) -> RegularReal,
    pub add: fn(&RegularReal, &RegularReal) -> RegularReal,
    pub mul: fn(&RegularReal, &RegularReal) -> RegularReal,
    pub min: fn(&RegularReal, &RegularReal) -> RegularReal,
    pub max: fn(&RegularReal, &RegularReal) -> RegularReal,
    pub abs: fn(&RegularReal) -> RegularReal,
    pub scale: fn(&Rational, &RegularReal) -> RegularReal,
    pub bounded_mul: fn(&PositiveRational, &RegularReal) -> LipschitzFn,
    pub recip: fn(&RegularReal, &ApartnessWitness) -> RegularReal,
}

impl Default for Ops {
    fn default() -> Self {
        Ops {
            neg: algebra::neg,
            add: algebra::add,
            mul: algebra::mul,
            min: algebra::rmin,
            max: algebra::rmax,
            abs: algebra::rabs,
            scale: algebra::scale_rational,
            bounded_mul: algebra::bounded_mul,
            recip: algebra::recip,
        }
    }
}

impl Ops {
    fn sub(&self, u: &RegularReal, v: &RegularReal) -> RegularReal {
        (self.add)(u, &(self.neg)(v))
    }
}

#[derive(Clone, Debug)]
pub struct LawConfig {
    pub samples: usize,
    pub epsilon: PositiveRational,
    pub seed: u64,
    pub fuel: u32,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig { samples: 200, epsilon: PositiveRational::pow10_neg(9), seed: 0, fuel: 64 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub law: &'static str,
    pub sample: usize,
    pub detail: String,
}

impl fmt::Display for LawViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (sample {}): {}", self.law, self.sample, self.detail)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checks: usize,
    pub violations: Vec<LawViolation>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: LawReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }

    fn check(&mut self, law: &'static str, sample: usize, outcome: Result<(), String>) {
        self.checks += 1;
        if let Err(detail) = outcome {
            self.violations.push(LawViolation { law, sample, detail });
        }
    }

    /// A check that only counts when it applies.
    fn check_if(&mut self, law: &'static str, sample: usize, outcome: Option<Result<(), String>>) {
        if let Some(outcome) = outcome {
            self.check(law, sample, outcome);
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        write!(f, "{} checks, {} violations", self.checks, self.violations.len())
    }
}

fn show(q: &Rational) -> String {
    format_scaled(&round_scaled(q, 15), 15)
}

fn lit(q: &Rational) -> RegularReal {
    RegularReal::from_rational(q.clone())
}

/// `|x - y| < ε`, certified from approximants at `ε/10`.
pub fn equal_within(x: &RegularReal, y: &RegularReal, eps: &PositiveRational) -> Result<(), String> {
    let bounds = distance_bounds(x, y, &eps.div_int(10));
    if &bounds.upper < eps.get() {
        Ok(())
    } else {
        Err(format!("distance upper bound {} >= {}", show(&bounds.upper), eps))
    }
}

/// Refines the oracle until it shows `lo < x < hi` for the value of `e`, or
/// shows it false.
fn oracle_strictly_inside(e: &Expr, lo: Option<&Rational>, hi: Option<&Rational>) -> Result<(), String> {
    if let Some(q) = exact_eval(e) {
        let ok = lo.is_none_or(|l| l < &q) && hi.is_none_or(|h| &q < h);
        return if ok { Ok(()) } else { Err(format!("exact value {q} outside")) };
    }
    for k in 0..200 {
        let i: RationalInterval = interval_eval(e, &PositiveRational::pow2_neg(k)).map_err(|err| err.to_string())?;
        if lo.is_some_and(|l| i.hi <= *l) || hi.is_some_and(|h| i.lo >= *h) {
            return Err(format!("oracle encloses the value in [{}, {}]", show(&i.lo), show(&i.hi)));
        }
        if lo.is_none_or(|l| i.lo > *l) && hi.is_none_or(|h| i.hi < *h) {
            return Ok(());
        }
    }
    Err(String::from("oracle could not separate"))
}

/// Draws the sample pool for a configuration.
pub fn sample_pool(cfg: &LawConfig) -> Vec<Sample> {
    let mut generator = SampleGen::new(cfg.seed);
    (0..cfg.samples).map(|_| generator.real(cfg.fuel)).collect()
}

/// Index triples into a pool of `n`, one per sample, reproducible per seed.
fn triples(n: usize, seed: u64) -> Vec<(usize, usize, usize)> {
    let mut generator = SampleGen::new(seed ^ 0x9e37_79b9_7f4a_7c15);
    let rng = generator.rng();
    (0..n).map(|i| (i, rng.gen_range(0..n), rng.gen_range(0..n))).collect()
}

/// Group, lattice, translation, midpoint, ring and magnitude laws.
pub fn algebra_laws(pool: &[Sample], cfg: &LawConfig, ops: &Ops) -> LawReport {
    let eps = &cfg.epsilon;
    let mut report = LawReport::default();
    let zero = lit(&Rational::zero());
    let one = lit(&Rational::one());
    let half = Rational::ratio(1, 2);
    let eq = |x: &RegularReal, y: &RegularReal| equal_within(x, y, eps);
    for (i, j, k) in triples(pool.len(), cfg.seed) {
        let (a, b, c) = (&pool[i].value, &pool[j].value, &pool[k].value);
        let (add, mul, min, max) = (ops.add, ops.mul, ops.min, ops.max);

        report.check("add-assoc", i, eq(&add(&add(a, b), c), &add(a, &add(b, c))));
        report.check("add-comm", i, eq(&add(a, b), &add(b, a)));
        report.check("add-unit", i, eq(&add(a, &zero), a));
        report.check("add-inverse", i, eq(&add(a, &(ops.neg)(a)), &zero));

        report.check("min-assoc", i, eq(&min(&min(a, b), c), &min(a, &min(b, c))));
        report.check("max-assoc", i, eq(&max(&max(a, b), c), &max(a, &max(b, c))));
        report.check("min-comm", i, eq(&min(a, b), &min(b, a)));
        report.check("max-comm", i, eq(&max(a, b), &max(b, a)));
        report.check("min-idem", i, eq(&min(a, a), a));
        report.check("max-idem", i, eq(&max(a, a), a));
        report.check("absorb-min-max", i, eq(&min(a, &max(a, b)), a));
        report.check("absorb-max-min", i, eq(&max(a, &min(a, b)), a));

        report.check("max-translate", i, eq(&max(&add(a, b), &add(a, c)), &add(a, &max(b, c))));
        let midpoint = add(&(ops.scale)(&half, &add(b, c)), &(ops.scale)(&half, &(ops.abs)(&ops.sub(b, c))));
        report.check("max-midpoint", i, eq(&max(b, c), &midpoint));

        report.check("mul-comm", i, eq(&mul(a, b), &mul(b, a)));
        report.check("mul-assoc", i, eq(&mul(&mul(a, b), c), &mul(a, &mul(b, c))));
        report.check("mul-distrib", i, eq(&mul(a, &add(b, c)), &add(&mul(a, b), &mul(a, c))));
        report.check("mul-unit", i, eq(&mul(a, &one), a));
        report.check("mul-zero", i, eq(&mul(a, &zero), &zero));
        let magnitude = mul(&(ops.abs)(a), &(ops.abs)(&ops.sub(b, c)));
        report.check("mul-magnitude", i, eq(&(ops.abs)(&ops.sub(&mul(a, b), &mul(a, c))), &magnitude));

        let product = Expr::mul(pool[i].expr.clone(), pool[j].expr.clone());
        report.check("mul-oracle", i, oracle_agrees(&mul(a, b), &product, eps));
    }
    report
}

/// `u(ε)` lies within `ε` of an oracle enclosure of width `≤ ε/4`.
fn oracle_agrees(u: &RegularReal, e: &Expr, eps: &PositiveRational) -> Result<(), String> {
    let i = interval_eval(e, &eps.div_int(8)).map_err(|err| err.to_string())?;
    let a = u.approximate(eps);
    if a >= &i.lo - eps.get() && a <= &i.hi + eps.get() {
        Ok(())
    } else {
        Err(format!("approximant {} outside oracle [{}, {}] ± ε", show(&a), show(&i.lo), show(&i.hi)))
    }
}

/// `bounded_mul` with bounds `L = bound_above(v)` and a second valid bound
/// `2L + 1` give the same product.
pub fn weak_constancy(pool: &[Sample], cfg: &LawConfig, ops: &Ops) -> LawReport {
    let mut report = LawReport::default();
    for (i, j, _) in triples(pool.len(), cfg.seed) {
        let (u, v) = (&pool[i].value, &pool[j].value);
        let first = algebra::bound_above(v);
        let second = first.add(&first).add(&PositiveRational::one());
        let x = (ops.bounded_mul)(&first, v).apply(u);
        let y = (ops.bounded_mul)(&second, v).apply(u);
        report.check("weak-constancy", i, equal_within(&x, &y, &cfg.epsilon));
    }
    report
}

/// `u · recip(u, w) = 1` whenever an apartness witness `w` is found.
pub fn reciprocal_law(pool: &[Sample], cfg: &LawConfig, ops: &Ops) -> LawReport {
    let mut report = LawReport::default();
    let one = lit(&Rational::one());
    for (i, s) in pool.iter().enumerate() {
        let outcome = apart_zero(&s.value, cfg.fuel).map(|w| {
            if !w.plausible_for(&s.value) {
                return Err(format!("implausible witness {w:?}"));
            }
            equal_within(&(ops.mul)(&s.value, &(ops.recip)(&s.value, &w)), &one, &cfg.epsilon)
        });
        report.check_if("recip-inverse", i, outcome);
    }
    report
}

/// Soundness of `between` for a certified pair.
pub fn between_check(u: &Sample, v: &Sample, w: &LtWitness) -> Result<(), String> {
    if !w.verify(&u.value, &v.value) {
        return Err(format!("witness {w:?} does not verify"));
    }
    let q = between(&u.value, &v.value, w);
    oracle_strictly_inside(&u.expr, None, Some(&q)).map_err(|e| format!("u < {q} fails: {e}"))?;
    oracle_strictly_inside(&v.expr, Some(&q), None).map_err(|e| format!("{q} < v fails: {e}"))
}

/// Soundness of `weak_linear(q, r, u)`: `q < u` or `u < r` as claimed.
pub fn weak_linear_check(q: &Rational, r: &Rational, u: &Sample) -> Result<Placement, String> {
    let placement = weak_linear(q, r, &u.value).map_err(|e| e.to_string())?;
    let outcome = match placement {
        Placement::Above => oracle_strictly_inside(&u.expr, Some(q), None),
        Placement::Below => oracle_strictly_inside(&u.expr, None, Some(r)),
    };
    outcome.map(|()| placement).map_err(|e| format!("{placement:?} for ({q}, {r}): {e}"))
}

/// A random interval `q < r` near `u`, so both placements occur.
pub fn interval_near(generator: &mut SampleGen, u: &RegularReal) -> (Rational, Rational) {
    let centre = u.approximate(&PositiveRational::ratio(1, 100));
    let rng = generator.rng();
    let offset = Rational::ratio(rng.gen_range(-400..=400), 100);
    let width = Rational::ratio(rng.gen_range(1..=300), rng.gen_range(1..=1000));
    let q = &centre + &offset - width.half();
    let r = &q + &width;
    (q, r)
}

/// Irreflexivity, asymmetry, translation, `between`, positivity of
/// products, weak linearity and the rational embedding.
pub fn order_laws(pool: &[Sample], cfg: &LawConfig, ops: &Ops) -> LawReport {
    let mut report = LawReport::default();
    let fuel = cfg.fuel;
    let zero = Sample { expr: Expr::lit(0), value: lit(&Rational::zero()) };
    let mut generator = SampleGen::new(cfg.seed.wrapping_add(1));
    for (i, j, k) in triples(pool.len(), cfg.seed) {
        let (u, v, a) = (&pool[i], &pool[j], &pool[k]);

        report.check(
            "lt-irreflexive",
            i,
            match lt_semidecide(&u.value, &u.value, fuel) {
                None => Ok(()),
                Some(w) => Err(format!("witness {w:?} for u < u")),
            },
        );

        let forward = lt_semidecide(&u.value, &v.value, fuel);
        report.check_if(
            "lt-asymmetric",
            i,
            forward.as_ref().map(|_| match lt_semidecide(&v.value, &u.value, fuel) {
                None => Ok(()),
                Some(w) => Err(format!("witnesses both ways, reverse {w:?}")),
            }),
        );

        report.check_if(
            "lt-translate",
            i,
            forward.as_ref().map(|_| {
                let (au, av) = ((ops.add)(&a.value, &u.value), (ops.add)(&a.value, &v.value));
                match lt_semidecide(&au, &av, fuel) {
                    Some(w) if w.verify(&au, &av) => Ok(()),
                    Some(w) => Err(format!("witness {w:?} does not verify")),
                    None => Err(String::from("no witness for a + u < a + v")),
                }
            }),
        );

        report.check_if("between", i, forward.as_ref().map(|w| between_check(u, v, w)));

        let positive = |s: &Sample| lt_semidecide(&zero.value, &s.value, fuel).is_some();
        if positive(u) && positive(v) {
            let product = (ops.mul)(&u.value, &v.value);
            let outcome = match lt_semidecide(&zero.value, &product, fuel) {
                Some(_) => Ok(()),
                None => Err(String::from("no witness for 0 < u·v")),
            };
            report.check("mul-positive", i, outcome);
        }

        let (q, r) = interval_near(&mut generator, &u.value);
        report.check("weak-linear", i, weak_linear_check(&q, &r, u).map(|_| ()));

        let (x, y) = (generator.rational(), generator.rational());
        report.check("embed-lt", i, embed_lt(&x, &y, fuel));
        report.check("embed-ops", i, embed_ops(&x, &y, ops));
    }
    report
}

fn embed_lt(x: &Rational, y: &Rational, fuel: u32) -> Result<(), String> {
    let found = lt_semidecide(&lit(x), &lit(y), fuel).is_some();
    if found == (x < y) {
        Ok(())
    } else {
        Err(format!("lt({x}, {y}) witnessed: {found}"))
    }
}

/// Operations on embedded rationals compute the rational result exactly.
fn embed_ops(x: &Rational, y: &Rational, ops: &Ops) -> Result<(), String> {
    let (u, v) = (lit(x), lit(y));
    let cases = [
        ("add", (ops.add)(&u, &v), x + y),
        ("mul", (ops.mul)(&u, &v), x * y),
        ("neg", (ops.neg)(&u), -x),
        ("max", (ops.max)(&u, &v), x.sup(y)),
        ("min", (ops.min)(&u, &v), x.inf(y)),
    ];
    for (name, real, exact) in cases {
        for eps in [PositiveRational::one(), PositiveRational::pow10_neg(9)] {
            let got = real.approximate(&eps);
            if got != exact {
                return Err(format!("{name}({x}, {y}) at {eps}: {got} != {exact}"));
            }
        }
    }
    Ok(())
}

/// Lipschitz contracts: for certified `u ∼[ε] v`, lifted maps with constant
/// `L` never refute `f(u) ∼[L·ε + slack] f(v)`.
pub fn lipschitz_contracts(
    generator: &mut SampleGen,
    instances: usize,
    slack: &PositiveRational,
    fuel: u32,
) -> LawReport {
    let mut report = LawReport::default();
    let mut done = 0;
    let mut index = 0;
    while done < instances {
        index += 1;
        let u = generator.real(fuel);
        let eps = PositiveRational::pow10_neg(generator.rng().gen_range(1..=9));
        let fraction = Rational::ratio(generator.rng().gen_range(-99..=99), 100);
        let v = algebra::add(&u.value, &lit(&(eps.get() * &fraction)));
        if close_semidecide(&u.value, &v, &eps, fuel).verdict != Verdict::Yes {
            continue;
        }
        done += 1;
        let other = generator.real(fuel).value;
        let q = generator.rational();
        let delta = PositiveRational::ratio(generator.rng().gen_range(1..=10), 10);
        let maps: Vec<(&'static str, LipschitzFn)> = vec![
            ("neg", LipschitzFn::new(PositiveRational::one(), algebra::neg)),
            ("scale", algebra::scale_map(&q)),
            ("bounded-mul", algebra::bounded_mul(&algebra::bound_above(&other), &other)),
            ("recip-clamped", algebra::recip_clamped(&delta)),
            ("abs", LipschitzFn::new(PositiveRational::one(), algebra::rabs)),
        ];
        for (name, f) in maps {
            let target = f.constant().mul(&eps).add(slack);
            let outcome = match close_semidecide(&f.apply(&u.value), &f.apply(&v), &target, fuel).verdict {
                Verdict::No => Err(format!("{name}: outputs refuted {target}-close for ε = {eps}")),
                _ => Ok(()),
            };
            report.check("lipschitz", index, outcome);
        }
        let translate = algebra::add(&u.value, &other);
        let outcome = match close_semidecide(&translate, &algebra::add(&v, &other), &eps.add(slack), fuel).verdict {
            Verdict::No => Err(format!("add: outputs refuted close for ε = {eps}")),
            _ => Ok(()),
        };
        report.check("nonexpanding", index, outcome);
    }
    report
}

/// The whole suite under `ops`.
pub fn run_laws(cfg: &LawConfig, ops: &Ops) -> LawReport {
    let pool = sample_pool(cfg);
    let mut report = algebra_laws(&pool, cfg, ops);
    report.merge(weak_constancy(&pool, cfg, ops));
    report.merge(reciprocal_law(&pool, cfg, ops));
    report.merge(order_laws(&pool, cfg, ops));
    report
}
