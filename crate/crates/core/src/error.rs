use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("band width k must be at least 1")]
    ZeroBandWidth,

    #[error("band width k = {0} is too large (k^2 + k must fit in 64 bits)")]
    BandWidthTooLarge(u64),

    #[error("matrix dimension must be at least 1")]
    EmptyMatrix,

    #[error("dimension {n} exceeds the materialization cap {cap}; use the graph or closed-form method instead")]
    DimensionCap { n: u64, cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime {p} is not admissible for band width {k} (need p > k(k+1))")]
    InadmissiblePrime { p: u64, k: u64 },

    #[error("gcd({j}, {q}) != 1")]
    NotCoprime { q: u64, j: u64 },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("malformed integer {0:?}")]
    MalformedInteger(String),

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("interpolated coefficient of x^{degree} is not an integer")]
    NonIntegralCoefficient { degree: usize },

    #[error("line graph for k = {k} is inconsistent: {reason}")]
    Inconsistent { k: u64, reason: String },

    #[error("apex table: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
