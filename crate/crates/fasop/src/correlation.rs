//! Port correlation profiles from the antenna geometry (N, W).

use crate::error::{FasError, Result};
use crate::specfun::bessel_j0;
use std::f64::consts::PI;

/// Coefficients above this bound are clamped so that `1 − μ²` stays
/// bounded away from zero.
pub const MU_CLAMP: f64 = 1.0 - 1e-9;

/// Which geometry-to-correlation map produced a profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorrelationModel {
    /// Single coefficient shared by all ports, no reference port.
    UniformNoReference,
    /// Jakes coefficients of each port against port 1.
    FirstPortReference,
}

/// Per-port correlation coefficients `μ_k`, `k = 1..N`.
///
/// `mu[0]` (port 1) is fixed at 1 by convention and never enters the
/// outage formulas; ports `k ≥ 2` satisfy `0 ≤ μ_k < 1`.
#[derive(Debug, Clone)]
pub struct CorrelationProfile {
    pub mu: Vec<f64>,
    pub model: CorrelationModel,
    /// True if any coefficient had to be clamped below 1.
    pub clamped: bool,
}

impl CorrelationProfile {
    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    /// Coefficients for ports 2..N (the ones the formulas use).
    pub fn tail(&self) -> &[f64] {
        &self.mu[1..]
    }

    /// Profile with a single explicit coefficient for all ports `k ≥ 2`.
    /// Mostly useful in tests and for hand-built configurations.
    pub fn uniform_with(n: usize, mu: f64) -> Result<Self> {
        if n < 1 {
            return Err(FasError::Domain("profile needs at least one port".into()));
        }
        if !(0.0..1.0).contains(&mu) {
            return Err(FasError::Domain(format!("mu must be in [0,1), got {mu}")));
        }
        let mut v = vec![mu; n];
        v[0] = 1.0;
        Ok(CorrelationProfile {
            mu: v,
            model: CorrelationModel::UniformNoReference,
            clamped: false,
        })
    }

    /// Degenerate single-port profile (no correlated neighbours).
    pub fn single_port() -> Self {
        CorrelationProfile {
            mu: vec![1.0],
            model: CorrelationModel::UniformNoReference,
            clamped: false,
        }
    }
}

fn check_geometry(n: usize, w: f64) -> Result<()> {
    if n < 2 {
        return Err(FasError::Domain(format!("need at least 2 ports, got N = {n}")));
    }
    if !(w > 0.0) {
        return Err(FasError::Domain(format!("antenna size W must be > 0, got {w}")));
    }
    Ok(())
}

/// Uniform correlation without a reference port:
/// `μ² = | (2 / (N(N−1))) Σ_{k=1}^{N−1} (N−k) J0(2πkW/(N−1)) |`,
/// shared by every port `k ≥ 2`.
pub fn mu_uniform(n: usize, w: f64) -> Result<CorrelationProfile> {
    check_geometry(n, w)?;
    let nf = n as f64;
    let mut sum = 0.0;
    for k in 1..n {
        let kf = k as f64;
        sum += (nf - kf) * bessel_j0(2.0 * PI * kf * w / (nf - 1.0));
    }
    let mu_sq = (2.0 * sum / (nf * (nf - 1.0))).abs();
    let mut mu = mu_sq.sqrt();
    let clamped = mu >= MU_CLAMP;
    if clamped {
        mu = MU_CLAMP;
    }
    let mut v = vec![mu; n];
    v[0] = 1.0;
    Ok(CorrelationProfile {
        mu: v,
        model: CorrelationModel::UniformNoReference,
        clamped,
    })
}

/// Jakes correlation of each port against port 1:
/// `μ_k = |J0(2π(k−1)W/(N−1))|` for `k = 2..N`.
pub fn mu_reference(n: usize, w: f64) -> Result<CorrelationProfile> {
    check_geometry(n, w)?;
    let nf = n as f64;
    let mut clamped = false;
    let mut v = Vec::with_capacity(n);
    v.push(1.0);
    for k in 2..=n {
        let mut mu = bessel_j0(2.0 * PI * (k as f64 - 1.0) * w / (nf - 1.0)).abs();
        if mu >= MU_CLAMP {
            mu = MU_CLAMP;
            clamped = true;
        }
        v.push(mu);
    }
    Ok(CorrelationProfile {
        mu: v,
        model: CorrelationModel::FirstPortReference,
        clamped,
    })
}
