use thiserror::Error;

/// Errors raised by parameter validation and truncation bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter set violates the stated condition for its case.
    #[error("invalid parameters for {case}: {condition}")]
    InvalidParameter { case: &'static str, condition: String },

    /// A central character with no simple bounded infinite-dimensional module.
    #[error("inadmissible central character: {0}")]
    Inadmissible(String),

    /// A truncated series is too short for the requested operation.
    #[error("order underflow: input valid to order {have}, operation needs at least {need}")]
    OrderUnderflow { have: i64, need: i64 },

    /// A power-series view was requested for a series with negative exponents.
    #[error("expansion has a term at negative exponent {0}")]
    NegativeSupport(i64),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error("cannot parse `{input}`: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
