//! Acceptance criteria, one line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use cauchy_reals::algebra::add;
use cauchy_reals::expr::eval;
use cauchy_reals::oracle::{exact_eval, interval_eval};
use cauchy_reals::order::{lt_semidecide, perturbation_suite};
use cauchy_reals::real::close_semidecide;
use cauchy_reals::{PositiveRational, Rational, RegularReal, Verdict};
use cauchy_reals_cli::compare::compare;
use cauchy_reals_cli::decimal::print_decimal;
use cauchy_reals_cli::laws::{
    between_check, interval_near, lipschitz_contracts, reciprocal_law, run_laws, weak_constancy, weak_linear_check,
    LawConfig, LawReport, Ops,
};
use cauchy_reals_cli::samples::{Sample, SampleGen};
use num_bigint::BigInt;
use rand::Rng;

const FUEL: u32 = 64;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn from_report(report: &LawReport, expected_checks: Option<usize>) -> Outcome {
    let mut detail = format!("{} checks, {} violations", report.checks, report.violations.len());
    if let Some(v) = report.violations.first() {
        detail.push_str(&format!("; first: {v}"));
    }
    let count_ok = expected_checks.is_none_or(|n| report.checks >= n);
    if !count_ok {
        detail.push_str(&format!("; expected at least {} checks", expected_checks.unwrap_or(0)));
    }
    Outcome { passed: report.passed() && count_ok, detail }
}

fn rational_computation() -> Outcome {
    let mut generator = SampleGen::new(101);
    let precisions = [PositiveRational::one(), PositiveRational::pow10_neg(3), PositiveRational::pow10_neg(9)];
    let mut mismatches = 0;
    let mut first = None;
    for _ in 0..1000 {
        let e = generator.rational_expr(6);
        let exact = exact_eval(&e).expect("generator excludes zero divisors");
        let ok = match eval(&e, 256) {
            Ok(u) => precisions.iter().all(|p| u.approximate(p) == exact),
            Err(_) => false,
        };
        if !ok {
            mismatches += 1;
            first.get_or_insert_with(|| e.to_string());
        }
    }
    Outcome {
        passed: mismatches == 0,
        detail: format!(
            "1000 expressions x 3 precisions, {mismatches} mismatches{}",
            first.map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    }
}

fn ordered_field_laws() -> Outcome {
    let cfg = LawConfig { samples: 200, epsilon: PositiveRational::pow10_neg(9), seed: 202, fuel: FUEL };
    from_report(&run_laws(&cfg, &Ops::default()), None)
}

fn lipschitz() -> Outcome {
    let mut generator = SampleGen::new(303);
    from_report(&lipschitz_contracts(&mut generator, 500, &PositiveRational::pow10_neg(12), FUEL), Some(500 * 6))
}

fn weak_linearity() -> Outcome {
    let mut generator = SampleGen::new(404);
    let mut violations = 0;
    let (mut above, mut below) = (0, 0);
    let mut first = None;
    for _ in 0..1000 {
        let u = generator.real(FUEL);
        let (q, r) = interval_near(&mut generator, &u.value);
        match weak_linear_check(&q, &r, &u) {
            Ok(cauchy_reals::order::Placement::Above) => above += 1,
            Ok(cauchy_reals::order::Placement::Below) => below += 1,
            Err(e) => {
                violations += 1;
                first.get_or_insert(e);
            }
        }
    }
    Outcome {
        passed: violations == 0 && above + below + violations == 1000,
        detail: format!(
            "1000 triples ({above} above, {below} below), {violations} violations{}",
            first.map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    }
}

fn archimedean_between() -> Outcome {
    let mut generator = SampleGen::new(505);
    let (mut pairs, mut violations, mut first) = (0, 0, None);
    while pairs < 500 {
        let (u, v) = (generator.real(FUEL), generator.real(FUEL));
        let Some(w) = lt_semidecide(&u.value, &v.value, FUEL) else { continue };
        pairs += 1;
        if let Err(e) = between_check(&u, &v, &w) {
            violations += 1;
            first.get_or_insert(e);
        }
    }
    Outcome {
        passed: violations == 0,
        detail: format!(
            "{pairs} certified pairs, {violations} violations{}",
            first.map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    }
}

fn bounded_mul_weak_constancy() -> Outcome {
    let cfg = LawConfig { samples: 100, epsilon: PositiveRational::pow10_neg(9), seed: 606, fuel: FUEL };
    let pool: Vec<Sample> = cauchy_reals_cli::laws::sample_pool(&cfg);
    from_report(&weak_constancy(&pool, &cfg, &Ops::default()), Some(100))
}

fn reciprocal_inverse() -> Outcome {
    let cfg = LawConfig { samples: 100, epsilon: PositiveRational::pow10_neg(9), seed: 707, fuel: FUEL };
    let mut generator = SampleGen::new(cfg.seed);
    let mut pool = Vec::new();
    while pool.len() < 100 {
        let s = generator.real(FUEL);
        if cauchy_reals::order::apart_zero(&s.value, FUEL).is_some() {
            pool.push(s);
        }
    }
    from_report(&reciprocal_law(&pool, &cfg, &Ops::default()), Some(100))
}

fn perturbation() -> Outcome {
    let mut generator = SampleGen::new(808);
    let samples: Vec<_> = (0..100).map(|_| generator.real(FUEL).expr).collect();
    let grid = [PositiveRational::pow10_neg(1), PositiveRational::pow10_neg(3), PositiveRational::pow10_neg(6)];
    let report = perturbation_suite(&samples, &grid, FUEL);
    let instances = samples.len() * grid.len();
    let mut missing = 0;
    for e in &samples {
        let u = eval(e, FUEL).expect("samples evaluate");
        for eps in &grid {
            let shifted = add(&u, &RegularReal::from_rational(eps.get().clone()));
            if lt_semidecide(&u, &shifted, 30).is_none() {
                missing += 1;
            }
        }
    }
    let mut detail = format!(
        "{instances} instances, {} checks, {} violations, {missing} missing witnesses at fuel 30",
        report.checks,
        report.violations.len()
    );
    if let Some(v) = report.violations.first() {
        detail.push_str(&format!("; first: {} on sample {}: {}", v.check, v.sample, v.detail));
    }
    Outcome { passed: report.violations.is_empty() && missing == 0 && report.checks >= instances, detail }
}

/// `√2` to 50 digits from integer square roots: `N = isqrt(2·10^100)`, and
/// the rounded value is `N + 1` exactly when `(2N + 1)² <= 8·10^100`.
fn sqrt2_reference(digits: u32) -> String {
    let scale = BigInt::from(10).pow(2 * digits);
    let n = (BigInt::from(2) * &scale).sqrt();
    let twice = BigInt::from(2) * &n + 1;
    let rounded = if &twice * &twice <= BigInt::from(8) * &scale { n + 1 } else { n };
    cauchy_reals_cli::decimal::format_scaled(&rounded, digits)
}

fn decimal_guarantee() -> Outcome {
    let mut generator = SampleGen::new(909);
    let mut failures = 0;
    let mut first = None;
    for index in 0..200 {
        let digits = [3, 9, 30][index % 3];
        let e = generator.real_expr();
        let u = eval(&e, FUEL).expect("samples evaluate");
        let printed: Rational = print_decimal(&u, digits).parse().expect("decimal parses");
        let i = interval_eval(&e, &PositiveRational::pow10_neg(digits + 2)).expect("oracle encloses");
        let tol = Rational::pow10_neg(digits);
        if printed < &i.lo - &tol || printed > &i.hi + &tol {
            failures += 1;
            first.get_or_insert_with(|| format!("{e} at {digits} digits"));
        }
    }
    let root = eval(&cauchy_reals_cli::parse("sqrt(2)").expect("parses"), FUEL).expect("evaluates");
    let (got, want) = (print_decimal(&root, 50), sqrt2_reference(50));
    let sqrt_ok = got == want;
    Outcome {
        passed: failures == 0 && sqrt_ok,
        detail: format!(
            "200 values, {failures} outside the guarantee; sqrt(2) at 50 digits {}{}",
            if sqrt_ok { "matches" } else { "differs" },
            first.map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    }
}

fn semidecision_hygiene() -> Outcome {
    let mut generator = SampleGen::new(1010);
    let mut flips = 0;
    let mut first = None;
    for index in 0..1000 {
        let u = generator.real(FUEL);
        // a third of the pairs are close on purpose
        let v = if index % 3 == 0 {
            let nudge = Rational::ratio(generator.rng().gen_range(-5..=5), 1_000_000);
            Sample { expr: u.expr.clone(), value: add(&u.value, &RegularReal::from_rational(nudge)) }
        } else {
            generator.real(FUEL)
        };
        let low: u32 = generator.rng().gen_range(1..20);
        let high = low + generator.rng().gen_range(1..40);
        let eps = PositiveRational::pow10_neg(generator.rng().gen_range(1..=8));

        let mut problem = None;
        let (fwd_low, fwd_high) = (lt_semidecide(&u.value, &v.value, low), lt_semidecide(&u.value, &v.value, high));
        let bwd_high = lt_semidecide(&v.value, &u.value, high);
        if fwd_low.is_some() && fwd_high.is_none() {
            problem = Some("lt witness lost with more fuel");
        }
        if fwd_high.is_some() && bwd_high.is_some() {
            problem = Some("lt witnessed both ways");
        }
        let (c_low, c_high) = (
            close_semidecide(&u.value, &v.value, &eps, low).verdict,
            close_semidecide(&u.value, &v.value, &eps, high).verdict,
        );
        if c_low != Verdict::Unknown && c_low != c_high {
            problem = Some("closeness verdict changed with more fuel");
        }
        let verdicts = [compare(&u.value, &v.value, low).to_string(), compare(&u.value, &v.value, high).to_string()];
        if verdicts.iter().any(|s| s == "LT") && verdicts.iter().any(|s| s == "GT") {
            problem = Some("compare gave both LT and GT");
        }
        if let Some(p) = problem {
            flips += 1;
            first.get_or_insert(format!("{p} (comparison {index})"));
        }
    }
    Outcome {
        passed: flips == 0,
        detail: format!(
            "1000 comparisons, {flips} flips{}",
            first.map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("rational computation is definitional", rational_computation),
        ("ordered-field law suite", ordered_field_laws),
        ("Lipschitz contracts of lifted maps", lipschitz),
        ("weak linearity is total and sound", weak_linearity),
        ("Archimedean between separates", archimedean_between),
        ("bounded multiplication is weakly constant", bounded_mul_weak_constancy),
        ("reciprocal inverse law", reciprocal_inverse),
        ("perturbation battery", perturbation),
        ("decimal guarantee", decimal_guarantee),
        ("semidecision hygiene", semidecision_hygiene),
    ];
    let mut all = true;
    for (number, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        all &= outcome.passed;
        println!(
            "criterion {:>2} {}: {} ({}; {:.1?})",
            number + 1,
            if outcome.passed { "PASS" } else { "FAIL" },
            name,
            outcome.detail,
            start.elapsed()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
