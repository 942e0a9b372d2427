use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("trapezoid components out of order: ({0}, {1}, {2}, {3})")]
    OutOfOrder(f64, f64, f64, f64),

    #[error("{what} = {value} lies outside [0, 1]")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("triangular support is degenerate: a = {a}, m = {m}, c = {c}")]
    DegenerateSupport { a: f64, m: f64, c: f64 },

    #[error("lambda must be strictly positive, got {0}")]
    NonPositiveLambda(f64),

    #[error("lambda must be finite, got {0}")]
    NonFiniteLambda(f64),

    #[error("universes differ: {0}")]
    UniverseMismatch(String),

    #[error("number is not triangular (b = c, f = g, m = n must hold at both levels)")]
    NotTriangular,

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("unknown linguistic term {0:?}")]
    UnknownTerm(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
