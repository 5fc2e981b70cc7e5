//! Outage probability of an N-port fluid antenna system (FAS) over
//! spatially correlated Nakagami-m fading.
//!
//! The crate computes the outage probability three ways and validates
//! them against each other:
//!
//! - [`analysis::exact_op`]: adaptive quadrature of the exact
//!   Marcum-Q-product integral;
//! - [`analysis::approx_op`]: a closed-form Gamma approximation whose
//!   shape/scale come from asymptotic matching ([`analysis::gamma_fit`]);
//! - [`analysis::asymptotic_op`]: the high-SNR power law with diversity
//!   order `N·m`;
//! - [`montecarlo`]: a correlated-channel Monte Carlo simulator used as
//!   ground truth for all of the above.
//!
//! A narrative guide with worked examples lives in `book/`; its code
//! blocks run as doctests of this crate.
//!
//! ```
//! use fasop::analysis::{self, FasConfig, QuadratureSettings};
//! use fasop::correlation;
//!
//! let cfg = FasConfig::new(10, 0.3, 1)?;
//! let prof = correlation::mu_uniform(10, 0.3)?;
//! let fit = analysis::gamma_fit(&cfg, &prof)?;
//!
//! let gamma_th = analysis::snr_threshold_linear(1.0); // 1 dB
//! let gamma_bar = analysis::snr_threshold_linear(15.0); // 15 dB
//! let exact = analysis::exact_op(&cfg, &prof, gamma_th, gamma_bar,
//!                                &QuadratureSettings::default())?;
//! let approx = analysis::approx_op(&fit, gamma_th, gamma_bar)?;
//! // the fit tracks the exact curve to a fraction of a decade here
//! // and converges onto it as the SNR grows
//! assert!((approx / exact).log10().abs() < 0.5);
//! # Ok::<(), fasop::FasError>(())
//! ```

pub mod analysis;
pub mod cli;
pub mod correlation;
mod error;
pub mod metrics;
pub mod montecarlo;
pub mod specfun;

pub use error::{FasError, Result};

// The book's code blocks are compiled and run with the library's tests.
#[cfg(doctest)]
#[doc = include_str!("../../../book/src/introduction.md")]
pub struct BookIntroduction;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/special-functions.md")]
pub struct BookSpecialFunctions;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/correlation.md")]
pub struct BookCorrelation;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/outage.md")]
pub struct BookOutage;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/monte-carlo.md")]
pub struct BookMonteCarlo;

#[cfg(doctest)]
#[doc = include_str!("../../../book/src/cli.md")]
pub struct BookCli;
