use num_bigint::BigInt;
use thiserror::Error;

/// Errors produced by the exact-arithmetic and bound computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("lcm is undefined for zero input")]
    LcmZero,

    #[error("factorization requires an integer >= 2, got {0}")]
    FactorizeRange(BigInt),

    #[error("series inversion requires constant coefficient +1 or -1, got {0}")]
    NonUnitConstant(BigInt),

    #[error("coefficient index {index} exceeds truncation order {truncation}")]
    TruncationExceeded { index: usize, truncation: usize },

    #[error("multidegree must contain at least one degree")]
    EmptyMultidegree,

    #[error("every degree must be >= 2, got {0}")]
    DegreeBelowTwo(u64),

    #[error("multidegree length {k} exceeds n + 1 = {limit}")]
    TooManyDegrees { k: usize, limit: u32 },

    #[error("the single quadric (2) is excluded")]
    QuadricExcluded,

    #[error("index i = {i} outside the range 1..={max}")]
    MultiplierIndex { i: u32, max: u32 },

    #[error("staircase enumeration budget exceeded (k + n = {budget} > 24); use the recursive method")]
    EnumerationBudget { budget: u32 },

    #[error("stratum dimension m = {m} exceeds ambient dimension n = {n}")]
    StratumDimension { m: u32, n: u32 },

    #[error("degree d = {d} is below the minimum {min} required by this bound")]
    DegreeTooSmall { d: u64, min: u64 },

    #[error("dimension n = {n} is below the minimum {min} required by this bound")]
    DimensionTooSmall { n: u32, min: u32 },

    #[error("no closed form is provided for n = {0}; supported: 2, 3, 4")]
    UnsupportedClosedForm(u32),

    /// A bound that is provably an integer evaluated to a proper fraction.
    /// This indicates an implementation defect, never a bad input.
    #[error("internal invariant violation: bound evaluated to the non-integer {0}")]
    NonIntegralBound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
