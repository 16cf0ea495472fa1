use thiserror::Error;

/// Errors reported by the exact power engine and everything built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A value or exponent would need more bits than the guard allows.
    #[error("exponent too large: needs {required} bits, guard limit is {limit} bits")]
    ExponentTooLarge { required: u64, limit: u64 },

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown equation `{0}`")]
    UnknownEquation(String),

    /// The two-variable equation was used where a triple equation is required.
    #[error("equation KEY2 takes a pair, not a triple")]
    PairEquation,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A fixed-width scalar could not hold an intermediate value.
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
