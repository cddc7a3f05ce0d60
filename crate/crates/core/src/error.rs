//! Error types shared across the engine.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QError {
    /// A monomial or series was requested with an exponent above its order.
    #[error("invalid construction: exponent {exponent} exceeds order {order}")]
    InvalidConstruction { exponent: i64, order: i64 },

    /// Inversion of the zero series or of a series whose leading
    /// coefficient is not a unit.
    #[error("no inverse: {0}")]
    NoInverse(String),

    /// A coefficient denominator is not invertible modulo the requested modulus.
    #[error("modular reduction: {0}")]
    ModularReduction(String),

    /// A bilateral or Lambert sum hits a vanishing denominator 1 - q^0.
    #[error("pole: {0}")]
    Pole(String),

    /// A theta function j(q^b; q^M) with b divisible by M vanishes identically.
    #[error("zero theta: j(q^{b}; q^{modulus}) vanishes identically")]
    ZeroTheta { b: i64, modulus: i64 },

    /// An infinite product whose factor exponents never exceed the truncation order.
    #[error("divergent product: step must be positive for infinite products")]
    Divergence,

    /// Unknown identity id or suite tag passed to the runner.
    #[error("unknown identity or suite: {0}")]
    UnknownId(String),
}

pub type Result<T> = std::result::Result<T, QError>;
