use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition token `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("parts must be weakly decreasing, but `{token}` follows a smaller part")]
    NotDecreasing { token: String },

    #[error("weight mismatch: expected {expected}, found {found}")]
    WeightMismatch { expected: usize, found: usize },

    #[error("caput constraint violated: need c <= k <= n, got n={n}, k={k}, c={c}")]
    CaputOrder { n: usize, k: usize, c: usize },

    #[error("n={n} exceeds the oracle bound {max}")]
    OracleBound { n: usize, max: usize },

    #[error("integrity violation: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
