use thiserror::Error;

/// Errors produced by bicomplex operations.
#[derive(Debug, Error)]
pub enum BcError {
    #[error("zero divisor: idempotent component {component} vanishes")]
    ZeroDivisor { component: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular in idempotent component {component}")]
    Singular { component: usize },

    #[error("matrix is not hyperbolic positive")]
    NotPositive,

    #[error("matrix is not a tensor product (reconstruction residual {residual:e})")]
    NotProduct { residual: f64 },

    #[error("trace of idempotent component {component} vanishes")]
    ZeroTrace { component: usize },

    #[error("map is not completely positive")]
    NotCP,

    #[error("rank {rank} out of range 1..={n}")]
    BadRank { rank: usize, n: usize },

    #[error("{s} does not divide {n}")]
    BadFactorization { n: usize, s: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl BcError {
    /// Stable identifier used in reports and across the C ABI.
    pub fn kind(&self) -> &'static str {
        match self {
            BcError::ZeroDivisor { .. } => "ZeroDivisor",
            BcError::ShapeMismatch(_) => "ShapeMismatch",
            BcError::NotSquare { .. } => "NotSquare",
            BcError::Singular { .. } => "Singular",
            BcError::NotPositive => "NotPositive",
            BcError::NotProduct { .. } => "NotProduct",
            BcError::ZeroTrace { .. } => "ZeroTrace",
            BcError::NotCP => "NotCP",
            BcError::BadRank { .. } => "BadRank",
            BcError::BadFactorization { .. } => "BadFactorization",
            BcError::Parse(_) => "ParseError",
            BcError::Io(_) => "IOError",
        }
    }

    /// True when the error reports a mathematical property that does not hold,
    /// as opposed to malformed input.
    pub fn is_mathematical(&self) -> bool {
        matches!(
            self,
            BcError::ZeroDivisor { .. }
                | BcError::Singular { .. }
                | BcError::NotPositive
                | BcError::NotProduct { .. }
                | BcError::ZeroTrace { .. }
                | BcError::NotCP
        )
    }
}

pub type Result<T> = std::result::Result<T, BcError>;
