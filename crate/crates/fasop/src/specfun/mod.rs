//! Special-function kernel: log-gamma, regularized incomplete gamma,
//! generalized Marcum Q, and the Bessel function J0.
//!
//! Everything here is pure and deterministic; all routines are plain
//! functions of `f64` with no shared state.

mod bessel;
mod gamma;
mod marcum;

pub use bessel::bessel_j0;
pub use gamma::{ln_gamma, reg_lower_gamma, reg_upper_gamma};
pub use marcum::{marcum_p, marcum_q, marcum_p_with, marcum_q_with};

/// Accuracy budget for the iterative special functions.
#[derive(Debug, Clone, Copy)]
pub struct Accuracy {
    /// Absolute truncation tolerance for series tails.
    pub abs_tol: f64,
    /// Iteration budget before a convergence error is raised.
    pub max_terms: usize,
}

impl Default for Accuracy {
    fn default() -> Self {
        Accuracy {
            abs_tol: 1e-12,
            max_terms: 10_000,
        }
    }
}

impl Accuracy {
    pub fn new(abs_tol: f64, max_terms: usize) -> Self {
        assert!(abs_tol > 0.0, "abs_tol must be positive");
        assert!(max_terms >= 1, "max_terms must be at least 1");
        Accuracy { abs_tol, max_terms }
    }
}
