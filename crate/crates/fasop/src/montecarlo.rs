//! Monte Carlo channel simulator: correlated Nakagami-m port gains,
//! max-port selection, and empirical outage estimates.
//!
//! Port gains are built from Gaussian branches: each of the m complex
//! dimensions draws reference normals `(x₁, y₁)` and sets
//! `x_k = μ_k x₁ + √(1−μ_k²) w` (fresh `w`) for ports k ≥ 2. The gain
//! `g_k = Ω_k²/(2m) Σ_i (x_{k,i}² + y_{k,i}²)` then has `E[g_k] = Ω_k²`,
//! and the conditional law of port k given port 1 is exactly the
//! noncentral chi structure the exact quadrature's Marcum Q encodes, so
//! the simulator is a true oracle for the analytical path.

use crate::analysis::FasConfig;
use crate::correlation::CorrelationProfile;
use crate::error::{FasError, Result};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

/// Empirical outage estimate.
#[derive(Debug, Clone, Copy, serde::Serialize)]
pub struct McEstimate {
    pub op_hat: f64,
    pub n_samples: u64,
    /// Binomial standard error √(p̂(1−p̂)/n).
    pub std_err: f64,
    pub seed: u64,
}

fn check_inputs(cfg: &FasConfig, prof: &CorrelationProfile) -> Result<()> {
    if prof.len() != cfg.n {
        return Err(FasError::Domain(format!(
            "profile length {} does not match N = {}",
            prof.len(),
            cfg.n
        )));
    }
    Ok(())
}

/// Draw one vector of N correlated port gains into `gains`.
pub fn sample_port_gains<R: Rng>(
    cfg: &FasConfig,
    prof: &CorrelationProfile,
    rng: &mut R,
    gains: &mut [f64],
) {
    debug_assert_eq!(gains.len(), cfg.n);
    gains.fill(0.0);
    for _ in 0..cfg.m {
        let x1: f64 = rng.sample(StandardNormal);
        let y1: f64 = rng.sample(StandardNormal);
        gains[0] += x1 * x1 + y1 * y1;
        for k in 1..cfg.n {
            let mu = prof.mu[k];
            let s = (1.0 - mu * mu).sqrt();
            let wx: f64 = rng.sample(StandardNormal);
            let wy: f64 = rng.sample(StandardNormal);
            let x = mu * x1 + s * wx;
            let y = mu * y1 + s * wy;
            gains[k] += x * x + y * y;
        }
    }
    let scale = 1.0 / (2.0 * cfg.m as f64);
    for (g, om) in gains.iter_mut().zip(&cfg.omega) {
        *g *= om * om * scale;
    }
}

/// Empirical outage probability of the max-port selection: fraction of
/// trials with `γ̄ · max_k g_k < γ_th`.
pub fn empirical_op(
    cfg: &FasConfig,
    prof: &CorrelationProfile,
    gamma_th: f64,
    gamma_bar: f64,
    n_samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    check_inputs(cfg, prof)?;
    if n_samples < 1 {
        return Err(FasError::Domain("n_samples must be >= 1".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut gains = vec![0.0; cfg.n];
    let threshold_gain = gamma_th / gamma_bar;
    let mut outages = 0u64;
    for _ in 0..n_samples {
        sample_port_gains(cfg, prof, &mut rng, &mut gains);
        let best = gains.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if best < threshold_gain {
            outages += 1;
        }
    }
    Ok(estimate(outages, n_samples, seed))
}

/// Empirical outage of L-branch MRC over i.i.d. Nakagami-m branches
/// (sum of branch gains against the threshold).
pub fn empirical_mrc_op(
    l: u32,
    m: u32,
    omega: f64,
    gamma_th: f64,
    gamma_bar: f64,
    n_samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    if l < 1 || m < 1 {
        return Err(FasError::Domain("L and m must be positive integers".into()));
    }
    if !(omega > 0.0) {
        return Err(FasError::Domain(format!("omega must be > 0, got {omega}")));
    }
    if n_samples < 1 {
        return Err(FasError::Domain("n_samples must be >= 1".into()));
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let threshold_gain = gamma_th / gamma_bar;
    let scale = omega * omega / (2.0 * m as f64);
    let mut outages = 0u64;
    for _ in 0..n_samples {
        let mut sum = 0.0;
        for _ in 0..(l * m) {
            let x: f64 = rng.sample(StandardNormal);
            let y: f64 = rng.sample(StandardNormal);
            sum += x * x + y * y;
        }
        if sum * scale < threshold_gain {
            outages += 1;
        }
    }
    Ok(estimate(outages, n_samples, seed))
}

fn estimate(outages: u64, n: u64, seed: u64) -> McEstimate {
    let p = outages as f64 / n as f64;
    McEstimate {
        op_hat: p,
        n_samples: n,
        std_err: (p * (1.0 - p) / n as f64).sqrt(),
        seed,
    }
}
