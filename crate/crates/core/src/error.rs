use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got {0}")]
    NonPositive(i128),

    #[error("sigma sieve of {limit} entries needs {needed} bytes, budget is {budget} bytes")]
    SieveBudget {
        limit: u64,
        needed: u64,
        budget: u64,
    },

    #[error("operands live in different fields: Q(sqrt {0}) and Q(sqrt {1})")]
    MixedRadicand(i64, i64),

    #[error("({n}, {r}) is not of Richaud-Degert type: {reason}")]
    NotRd { n: i64, r: i64, reason: String },

    #[error("radicand {0} is not squarefree")]
    NotSquarefree(i64),

    #[error("radicand {0} does not define a real quadratic field")]
    DegenerateRadicand(i64),

    #[error("radicand {d} is {found}, expected {expected}")]
    WrongCongruence {
        d: i64,
        found: String,
        expected: &'static str,
    },

    #[error("{p} is not an odd prime divisor of n = {n}")]
    NotOddPrimeDivisor { p: i64, n: i64 },

    #[error("matrix entry {entry} = {value} is not a rational integer")]
    NonIntegralEntry { entry: &'static str, value: String },

    #[error("no closed form for S^{index}({h}, {k})")]
    UnsupportedPattern { index: u8, h: i64, k: i64 },

    #[error("transform matrix has c = 0")]
    ZeroC,

    #[error("gcd({h}, {k}) = {g} is not 1")]
    NotCoprime { h: i64, k: i64, g: i64 },

    #[error("{0} is not a real quadratic field discriminant")]
    InvalidDiscriminant(i64),

    #[error("discriminant {0} is not fundamental")]
    NonFundamental(i64),

    #[error("no closed form for this field: {0}")]
    UncoveredCase(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("n = {0} has no odd prime divisor")]
    NoAdmissiblePrime(i64),

    #[error("value does not fit the output range: {0}")]
    Overflow(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
