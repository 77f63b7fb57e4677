use thiserror::Error;

/// Errors raised by the library.
///
/// Hypothesis failures carry the name of the condition that did not hold so
/// that callers (and the CLI) can surface it verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation undefined: argument is 0")]
    ValuationUndefined,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("argument must be positive: {0}")]
    NonPositive(&'static str),
    #[error("odd primes only")]
    EvenPrime,
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("order unknown for this pair: {0}")]
    OrderUnknown(String),
    #[error("decomposition inapplicable: pi_4({0}) is nonzero in {1}")]
    Pi4Nontrivial(String, String),
    #[error("hypothesis {0} fails")]
    Hypothesis(String),
    #[error("{group} is outside the range {range} at p = {p}")]
    OutOfRange {
        group: String,
        range: &'static str,
        p: u64,
    },
    #[error("{0} is not p-regular at p = {1}; use the Theriault route")]
    NotRegular(String, u64),
    #[error("unsupported target: {0}")]
    Unsupported(String),
    #[error("not rationally simply connected (b_1 = {0})")]
    NotSimplyConnected(u32),
    #[error("{0}")]
    InvalidInput(String),
    #[error("catalog error at line {line}: {msg}")]
    Catalog { line: usize, msg: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn hypothesis(name: impl Into<String>) -> Error {
    Error::Hypothesis(name.into())
}
