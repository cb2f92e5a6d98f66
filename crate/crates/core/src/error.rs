use thiserror::Error;

/// Errors raised by the exact and numeric evaluators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cot({m}π/{n}) is a pole")]
    PoleAtInteger { n: u64, m: i64 },
    #[error("reciprocal of a series with zero leading coefficient")]
    ZeroLeadingCoefficient,
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("expected an integer result, got {0}")]
    NonIntegerResult(String),
    #[error("expected a rational result, got {0}")]
    NonRationalResult(String),
    #[error("internal identity violated: {0}")]
    InternalIdentityViolation(String),
    #[error("parity mismatch: χ(-1) = {chi_minus_one} but n = {n}")]
    ParityMismatch { n: u32, chi_minus_one: i32 },
    #[error("character is not primitive (conductor {conductor}, modulus {modulus})")]
    NotPrimitive { conductor: u64, modulus: u64 },
    #[error("α = 2π·{p}/{q} is a pole of the spectral sum")]
    AlphaIsPole { p: i64, q: u64 },
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("Green function evaluated on the diagonal s = t")]
    OnDiagonal,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
