use std::process::ExitCode;

use cauchy_reals::expr::eval;
use cauchy_reals::{Error, PositiveRational};
use cauchy_reals_cli::compare::{compare, Comparison};
use cauchy_reals_cli::decimal::print_decimal;
use cauchy_reals_cli::laws::{run_laws, LawConfig, Ops};
use cauchy_reals_cli::{parse, EvalConfig};
use clap::{Parser, Subcommand};

const VIOLATION: u8 = 1;
const USAGE: u8 = 2;
const APARTNESS: u8 = 3;

#[derive(Parser)]
#[command(name = "creal", version, about = "Exact real arithmetic calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression and print it with guaranteed digits.
    Eval {
        expr: String,
        #[arg(long, default_value_t = 20)]
        digits: u32,
        #[arg(long, default_value_t = EvalConfig::DEFAULT_FUEL)]
        fuel: u32,
    },
    /// Decide which of two expressions is smaller, if possible within the fuel.
    Compare {
        left: String,
        right: String,
        #[arg(long, default_value_t = EvalConfig::DEFAULT_FUEL)]
        fuel: u32,
        /// Exit with status 1 when the comparison is inconclusive.
        #[arg(long)]
        strict: bool,
    },
    /// Run the ordered-field law suite on seeded samples.
    Laws {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value = "1/1000000000")]
        epsilon: PositiveRational,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = EvalConfig::DEFAULT_FUEL)]
        fuel: u32,
    },
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn eval_error(e: Error) -> ExitCode {
    match e {
        Error::ApartnessFuel => fail(APARTNESS, "cannot verify divisor apart from zero"),
        other => fail(USAGE, other),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval { expr, digits, fuel } => {
            let cfg = match EvalConfig::new(digits, fuel, 0) {
                Ok(cfg) => cfg,
                Err(e) => return fail(USAGE, e),
            };
            let e = match parse(&expr) {
                Ok(e) => e,
                Err(e) => return fail(USAGE, e),
            };
            match eval(&e, cfg.fuel) {
                Ok(u) => {
                    println!("{}", print_decimal(&u, cfg.digits));
                    ExitCode::SUCCESS
                }
                Err(e) => eval_error(e),
            }
        }
        Command::Compare { left, right, fuel, strict } => {
            if fuel == 0 {
                return fail(USAGE, "fuel must be at least 1");
            }
            let mut values = Vec::new();
            for text in [&left, &right] {
                match parse(text).map_err(|e| fail(USAGE, e)).and_then(|e| eval(&e, fuel).map_err(eval_error)) {
                    Ok(u) => values.push(u),
                    Err(code) => return code,
                }
            }
            let outcome = compare(&values[0], &values[1], fuel);
            println!("{outcome}");
            if strict && matches!(outcome, Comparison::Unknown(_)) {
                ExitCode::from(VIOLATION)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Laws { samples, epsilon, seed, fuel } => {
            if fuel == 0 {
                return fail(USAGE, "fuel must be at least 1");
            }
            let report = run_laws(&LawConfig { samples, epsilon, seed, fuel }, &Ops::default());
            println!("{report}");
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(VIOLATION)
            }
        }
    }
}
