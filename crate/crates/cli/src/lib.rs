//! Command-line front end for `cauchy-reals`: expression parsing, decimal
//! output with a guaranteed error bound, two-sided comparison, and the
//! ordered-field law suite.

pub mod compare;
pub mod config;
pub mod decimal;
pub mod laws;
pub mod parse;
pub mod samples;

pub use config::EvalConfig;
pub use parse::{parse, ParseError};
