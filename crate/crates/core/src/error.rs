use thiserror::Error;

/// Errors reported by the exact and extended-precision routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("{what} must be positive, got {value}")]
    NotPositive { what: &'static str, value: String },

    #[error("{what} must be non-negative, got {value}")]
    Negative { what: &'static str, value: String },

    #[error("recursion produced ({p}, {n}) at k = {k}, which does not solve the quadratic")]
    RecursionCheck { k: usize, p: String, n: String },

    #[error("heat-trace tail bound {achieved} still above {target} at cutoff {cutoff}")]
    TailBound {
        achieved: String,
        target: String,
        cutoff: u64,
    },

    #[error("least-squares fit is ill-conditioned: relative residual {residual} exceeds {threshold}")]
    IllConditioned { residual: String, threshold: String },

    #[error("singular normal equations in least-squares fit")]
    Singular,

    #[error("invalid fit configuration: {0}")]
    FitConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
