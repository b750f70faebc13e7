use thiserror::Error;

/// Errors surfaced by the algebra kernel and the ideal engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polynomials belong to different rings ({0} vs {1})")]
    RingMismatch(String, String),

    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("negative exponent {0} in power")]
    NegativePower(i64),

    #[error("exponent overflow (exponents are capped at {max})", max = u16::MAX)]
    ExponentOverflow,

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("matrix size {size} exceeds the determinant cap {cap}")]
    MatrixTooLarge { size: usize, cap: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("quotient by the zero ideal")]
    ZeroIdeal,

    #[error("ideal is not homogeneous: generator `{0}` mixes degrees")]
    NonHomogeneous(String),

    #[error("ring has characteristic {char_p}, but {q} is not a power of it")]
    BadFrobeniusPower { char_p: u64, q: u64 },

    #[error("computation budget exhausted after {steps} reduction steps (budget {budget})")]
    BudgetExhausted { steps: u64, budget: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
