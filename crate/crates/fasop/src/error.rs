//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by the numerical routines.
#[derive(Debug, Clone, Error)]
pub enum FasError {
    /// An argument was outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative method exhausted its iteration budget.
    #[error("convergence failure in {context}: {detail}")]
    Convergence { context: &'static str, detail: String },

    /// A quantity overflowed f64 range; its natural log is reported instead.
    #[error("overflow: {context}, ln(value) = {ln_value}")]
    Overflow { context: &'static str, ln_value: f64 },

    /// Two curves were compared on different grids.
    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    /// The NMSE reference curve has zero variance.
    #[error("degenerate reference curve (zero variance)")]
    DegenerateReference,

    /// Invalid run specification (CLI layer).
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, FasError>;
