use core::fmt;

/// Errors reported by the arithmetic and evaluation layers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Reciprocal or division of an exact zero rational.
    DivisionByZero,
    /// An operation needing `q < r` received `q >= r`.
    EmptyRange,
    /// A value required to be strictly positive was not.
    NotPositive,
    /// A rational literal could not be parsed.
    Parse(&'static str),
    /// The divisor could not be separated from zero within the fuel budget.
    ApartnessFuel,
    /// Square root of a value certified to be negative.
    SqrtNegative,
    /// The interval oracle could not exclude zero from a divisor.
    Indeterminate,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::EmptyRange => f.write_str("empty range: lower end is not below upper end"),
            Error::NotPositive => f.write_str("value is not strictly positive"),
            Error::Parse(msg) => write!(f, "invalid rational literal: {msg}"),
            Error::ApartnessFuel => f.write_str("cannot verify divisor apart from zero"),
            Error::SqrtNegative => f.write_str("square root of a negative value"),
            Error::Indeterminate => f.write_str("interval oracle cannot exclude zero from divisor"),
        }
    }
}

impl core::error::Error for Error {}
