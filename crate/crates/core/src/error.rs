use thiserror::Error;

/// Errors surfaced by the symbolic engine.
///
/// Most operations are total on canonical inputs; errors come from mixing
/// incompatible registries, feeding non-invariant integrands to the cone
/// integrals, or asking for a limit that diverges.
#[derive(Debug, Error)]
pub enum EngineError {
    #[error("symbol registry mismatch: {0}")]
    RegistryMismatch(String),

    #[error("division by zero: {0}")]
    DivisionByZero(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("integrand is not invariant in (trace TY, det TY): offending monomial {0}")]
    NotInvariant(String),

    #[error("divergent: pole of order {order} at s=0")]
    Pole { order: i64 },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, EngineError>;
