use thiserror::Error;

/// Errors produced by lattice algebra operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown clodum `{0}` (expected max-plus, max-times, max-min or product-tnorm)")]
    UnknownClodum(String),

    #[error("value {value} outside the {carrier} carrier of {clodum}")]
    OutsideCarrier {
        value: f64,
        carrier: &'static str,
        clodum: &'static str,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operands belong to different cloduma ({0} vs {1})")]
    CloudmMismatch(&'static str, &'static str),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
