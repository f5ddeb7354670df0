use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KoebeError {
    #[error("order parameter must be nonzero")]
    ZeroOrder,

    #[error("point {re}{im:+}i is not inside the open unit disk")]
    OutsideDisk { re: f64, im: f64 },

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("principal power of zero with exponent of non-positive real part")]
    ZeroBase,

    #[error("power base must be a positive real, got {0}")]
    NonPositiveBase(f64),

    #[error("{0}")]
    Degenerate(&'static str),

    #[error("{0}")]
    InvalidParameter(String),
}
