//! Analytical outage-probability formulas: exact quadrature, the
//! closed-form small-argument intermediate, the Gamma fit obtained by
//! asymptotic matching, the asymptotic high-SNR form, and the MRC
//! baseline.

mod quad;

pub use quad::{integrate, QuadratureSettings};

use crate::correlation::CorrelationProfile;
use crate::error::{FasError, Result};
use crate::specfun::{ln_gamma, marcum_p_with, reg_lower_gamma, Accuracy};

/// System configuration of the N-port fluid antenna.
#[derive(Debug, Clone)]
pub struct FasConfig {
    /// Number of ports.
    pub n: usize,
    /// Antenna size in wavelengths.
    pub w: f64,
    /// Nakagami fading severity (positive integer).
    pub m: u32,
    /// Per-port amplitude parameter Ω_k; Ω_k² is the average channel power.
    pub omega: Vec<f64>,
}

impl FasConfig {
    /// Configuration with Ω_k = 1 for every port.
    pub fn new(n: usize, w: f64, m: u32) -> Result<Self> {
        Self::with_omega(n, w, m, vec![1.0; n])
    }

    pub fn with_omega(n: usize, w: f64, m: u32, omega: Vec<f64>) -> Result<Self> {
        if n < 1 {
            return Err(FasError::Domain("N must be >= 1".into()));
        }
        if !(w > 0.0) {
            return Err(FasError::Domain(format!("W must be > 0, got {w}")));
        }
        if m < 1 {
            return Err(FasError::Domain("m must be a positive integer".into()));
        }
        if omega.len() != n || omega.iter().any(|&o| !(o > 0.0)) {
            return Err(FasError::Domain("omega must have N positive entries".into()));
        }
        Ok(FasConfig { n, w, m, omega })
    }
}

/// Gamma-distribution fit of the FAS channel CDF by asymptotic matching.
#[derive(Debug, Clone, Copy)]
pub struct GammaFit {
    /// Shape, `α = mN` exactly.
    pub alpha: f64,
    /// Scale, `β = (1/(Γ(α) a₀ α))^{1/α}`.
    pub beta: f64,
    /// Natural log of the asymptotic CDF coefficient a₀. Kept in log
    /// form because a₀ overflows f64 for large N.
    pub ln_a0: f64,
}

impl GammaFit {
    /// The asymptotic coefficient itself; +∞ if it overflows f64.
    pub fn a0(&self) -> f64 {
        self.ln_a0.exp()
    }
}

/// Which formula produced a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Method {
    Exact,
    ClosedFormA2,
    GammaApprox,
    Asymptotic,
    Mrc,
    MonteCarlo,
}

/// One point of an outage curve.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct CurvePoint {
    pub gamma_bar_db: f64,
    pub op: f64,
}

/// Outage probability over an ordered grid of average SNRs.
#[derive(Debug, Clone, serde::Serialize)]
pub struct OpCurve {
    pub points: Vec<CurvePoint>,
    pub method: Method,
}

impl OpCurve {
    /// Requires strictly increasing grid; OP must be in [0,1] for every
    /// method except `Asymptotic` (which may exceed 1 at low SNR).
    pub fn new(method: Method, points: Vec<CurvePoint>) -> Result<Self> {
        for w in points.windows(2) {
            if !(w[1].gamma_bar_db > w[0].gamma_bar_db) {
                return Err(FasError::Domain("curve grid must be strictly increasing".into()));
            }
        }
        if method != Method::Asymptotic {
            if let Some(p) = points.iter().find(|p| !(0.0..=1.0).contains(&p.op)) {
                return Err(FasError::Domain(format!(
                    "OP out of [0,1] for {method:?} at {} dB: {}",
                    p.gamma_bar_db, p.op
                )));
            }
        }
        Ok(OpCurve { points, method })
    }

    pub fn grid(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.gamma_bar_db)
    }

    pub fn ops(&self) -> impl Iterator<Item = f64> + '_ {
        self.points.iter().map(|p| p.op)
    }
}

/// dB → linear power ratio, `10^(x/10)`.
pub fn snr_threshold_linear(gamma_th_db: f64) -> f64 {
    10f64.powf(gamma_th_db / 10.0)
}

fn check_snr(gamma_th: f64, gamma_bar: f64) -> Result<()> {
    if !(gamma_th > 0.0) || !(gamma_bar > 0.0) {
        return Err(FasError::Domain(format!(
            "SNR threshold and average must be > 0, got gamma_th = {gamma_th}, gamma_bar = {gamma_bar}"
        )));
    }
    Ok(())
}

fn check_profile(cfg: &FasConfig, prof: &CorrelationProfile) -> Result<()> {
    if prof.len() != cfg.n {
        return Err(FasError::Domain(format!(
            "profile length {} does not match N = {}",
            prof.len(),
            cfg.n
        )));
    }
    Ok(())
}

/// Exact outage probability by adaptive quadrature over the reference
/// envelope:
///
/// `P_out = ∫₀^√(γ_th/γ̄) 2 m^m/(Γ(m) Ω₁^{2m}) r^{2m−1} e^{−m r²/Ω₁²}
///          · Π_{k≥2} [1 − Q_m(a_k r, b_k)] dr`,
///
/// with `a_k = √(2m/(1−μ_k²)) μ_k/Ω₁` and
/// `b_k = √(2 m γ_th / (Ω_k² (1−μ_k²) γ̄))`. The port product is summed
/// in log space so hundreds of sub-unit factors cannot underflow.
pub fn exact_op(
    cfg: &FasConfig,
    prof: &CorrelationProfile,
    gamma_th: f64,
    gamma_bar: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    check_snr(gamma_th, gamma_bar)?;
    check_profile(cfg, prof)?;
    let m = cfg.m as f64;
    let omega1 = cfg.omega[0];
    let ln_pref = std::f64::consts::LN_2 + m * m.ln() - ln_gamma(m)? - 2.0 * m * omega1.ln();
    let acc = Accuracy::new(1e-13, 200_000);

    // Per-port constants; collapse identical ports into one factor with
    // a multiplicity (all-uniform profiles make the inner loop O(1)).
    struct Port {
        a_coeff: f64,
        b: f64,
        mult: f64,
    }
    let mut ports: Vec<Port> = Vec::new();
    for k in 1..cfg.n {
        let mu = prof.mu[k];
        let om = cfg.omega[k];
        let one_minus = 1.0 - mu * mu;
        let a_coeff = (2.0 * m / one_minus).sqrt() * mu / omega1;
        let b = (2.0 * m * gamma_th / (om * om * one_minus * gamma_bar)).sqrt();
        match ports.iter_mut().find(|p| p.a_coeff == a_coeff && p.b == b) {
            Some(p) => p.mult += 1.0,
            None => ports.push(Port { a_coeff, b, mult: 1.0 }),
        }
    }

    let upper = (gamma_th / gamma_bar).sqrt();
    let integrand = |r: f64| -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        let mut ln_f = ln_pref + (2.0 * m - 1.0) * r.ln() - m * r * r / (omega1 * omega1);
        for p in &ports {
            let pk = marcum_p_with(m, p.a_coeff * r, p.b, &acc).unwrap_or(0.0);
            if pk <= 0.0 {
                return 0.0;
            }
            ln_f += p.mult * pk.ln();
        }
        ln_f.exp()
    };
    let op = integrate(integrand, 0.0, upper, settings)?;
    Ok(op.clamp(0.0, 1.0))
}

/// Closed-form small-argument intermediate: the exact value of the
/// integral after the Marcum Q factors are replaced by their
/// small-argument gamma-tail form. Accurate for small `γ_th/γ̄`;
/// diagnostic only.
pub fn closed_form_op(
    cfg: &FasConfig,
    prof: &CorrelationProfile,
    gamma_th: f64,
    gamma_bar: f64,
) -> Result<f64> {
    check_snr(gamma_th, gamma_bar)?;
    check_profile(cfg, prof)?;
    let m = cfg.m as f64;
    let omega1 = cfg.omega[0];
    let ratio = gamma_th / gamma_bar;

    let mut corr_sum = 0.0; // Σ μ_k²/(1−μ_k²)
    let mut ln_port_prod = 0.0; // Σ m ln(m γ_th / (Ω_k²(1−μ_k²) γ̄))
    for k in 1..cfg.n {
        let mu = prof.mu[k];
        let one_minus = 1.0 - mu * mu;
        corr_sum += mu * mu / one_minus;
        ln_port_prod += m * (m * ratio / (cfg.omega[k] * cfg.omega[k] * one_minus)).ln();
    }
    let z = m * ratio * (1.0 + corr_sum) / (omega1 * omega1);
    // ln Υ(m, z) = ln P(m, z) + ln Γ(m)
    let ln_lower = reg_lower_gamma(m, z)?.ln() + ln_gamma(m)?;
    let ln_op = m * (m * ratio).ln() - ln_gamma(m)? - 2.0 * m * omega1.ln()
        - (cfg.n as f64 - 1.0) * ln_gamma(m + 1.0)?
        - m * z.ln()
        + ln_lower
        + ln_port_prod;
    Ok(ln_op.exp().min(1.0))
}

/// Natural log of the asymptotic CDF coefficient
/// `a₀ = m^{m−1}/(Γ(m) Ω₁^{2m} (m!)^{N−1}) · Π_{k≥2} (m/(Ω_k²(1−μ_k²)))^m`.
pub fn ln_a0_coefficient(cfg: &FasConfig, prof: &CorrelationProfile) -> Result<f64> {
    check_profile(cfg, prof)?;
    let m = cfg.m as f64;
    let mut ln_a0 = (m - 1.0) * m.ln() - ln_gamma(m)? - 2.0 * m * cfg.omega[0].ln()
        - (cfg.n as f64 - 1.0) * ln_gamma(m + 1.0)?;
    for k in 1..cfg.n {
        let mu = prof.mu[k];
        ln_a0 += m * (m / (cfg.omega[k] * cfg.omega[k] * (1.0 - mu * mu))).ln();
    }
    Ok(ln_a0)
}

/// The coefficient a₀ itself; reports its log if it overflows f64.
pub fn a0_coefficient(cfg: &FasConfig, prof: &CorrelationProfile) -> Result<f64> {
    let ln_a0 = ln_a0_coefficient(cfg, prof)?;
    let a0 = ln_a0.exp();
    if a0.is_finite() {
        Ok(a0)
    } else {
        Err(FasError::Overflow { context: "a0_coefficient", ln_value: ln_a0 })
    }
}

/// Gamma fit by asymptotic matching: `α = mN`,
/// `β = exp(−(ln Γ(α) + ln a₀ + ln α)/α)`.
pub fn gamma_fit(cfg: &FasConfig, prof: &CorrelationProfile) -> Result<GammaFit> {
    let ln_a0 = ln_a0_coefficient(cfg, prof)?;
    let alpha = cfg.m as f64 * cfg.n as f64;
    let beta = (-(ln_gamma(alpha)? + ln_a0 + alpha.ln()) / alpha).exp();
    Ok(GammaFit { alpha, beta, ln_a0 })
}

/// Approximate outage probability, `P(α, γ_th/(β γ̄))` with the
/// regularized lower incomplete gamma.
pub fn approx_op(fit: &GammaFit, gamma_th: f64, gamma_bar: f64) -> Result<f64> {
    check_snr(gamma_th, gamma_bar)?;
    reg_lower_gamma(fit.alpha, gamma_th / (fit.beta * gamma_bar))
}

/// Asymptotic outage probability `(γ_th/(β γ̄))^α / (α Γ(α))`.
///
/// Returned unclamped: it exceeds 1 at low SNR, and slope extraction
/// needs the raw value.
pub fn asymptotic_op(fit: &GammaFit, gamma_th: f64, gamma_bar: f64) -> Result<f64> {
    check_snr(gamma_th, gamma_bar)?;
    let ln_op = fit.alpha * (gamma_th / (fit.beta * gamma_bar)).ln() - fit.alpha.ln() - ln_gamma(fit.alpha)?;
    Ok(ln_op.exp())
}

/// Outage probability of L-branch MRC over i.i.d. Nakagami-m branches:
/// the summed gain is Gamma(Lm, Ω²/m), so `P_out = P(Lm, m γ_th/(Ω² γ̄))`.
pub fn mrc_op(l: u32, m: u32, omega: f64, gamma_th: f64, gamma_bar: f64) -> Result<f64> {
    if l < 1 {
        return Err(FasError::Domain("MRC branch count must be >= 1".into()));
    }
    if m < 1 {
        return Err(FasError::Domain("m must be a positive integer".into()));
    }
    if !(omega > 0.0) {
        return Err(FasError::Domain(format!("omega must be > 0, got {omega}")));
    }
    check_snr(gamma_th, gamma_bar)?;
    reg_lower_gamma(
        (l * m) as f64,
        m as f64 * gamma_th / (omega * omega * gamma_bar),
    )
}
