//! Goodness-of-fit (NMSE) and wall-clock benchmarking of the outage
//! formulas.

use crate::analysis::{
    approx_op, asymptotic_op, exact_op, gamma_fit, CurvePoint, FasConfig, Method, OpCurve,
    QuadratureSettings,
};
use crate::correlation::CorrelationProfile;
use crate::error::{FasError, Result};
use std::time::Instant;

/// Timing and accuracy summary for one configuration.
#[derive(Debug, Clone, serde::Serialize)]
pub struct BenchmarkRecord {
    pub label: String,
    pub exact_seconds: f64,
    pub approx_seconds: f64,
    pub asymptotic_seconds: f64,
    /// `100 · (1 − t_approx / t_exact)`.
    pub time_reduction_percent: f64,
    /// `nmse_log10` of the approximation against the exact curve.
    pub nmse: f64,
    /// 0 when unmeasured.
    pub peak_alloc_bytes: u64,
}

fn check_grids(reference: &OpCurve, candidate: &OpCurve) -> Result<()> {
    if reference.points.len() != candidate.points.len() {
        return Err(FasError::GridMismatch(format!(
            "{} vs {} points",
            reference.points.len(),
            candidate.points.len()
        )));
    }
    for (r, c) in reference.points.iter().zip(&candidate.points) {
        if r.gamma_bar_db != c.gamma_bar_db {
            return Err(FasError::GridMismatch(format!(
                "{} dB vs {} dB",
                r.gamma_bar_db, c.gamma_bar_db
            )));
        }
    }
    Ok(())
}

fn nmse_values(reference: &[f64], candidate: &[f64]) -> Result<f64> {
    let n = reference.len() as f64;
    let mean: f64 = reference.iter().sum::<f64>() / n;
    let var: f64 = reference.iter().map(|p| (p - mean) * (p - mean)).sum();
    if var == 0.0 {
        return Err(FasError::DegenerateReference);
    }
    let sq_err: f64 = reference
        .iter()
        .zip(candidate)
        .map(|(p, q)| (p - q) * (p - q))
        .sum();
    Ok(1.0 - sq_err / var)
}

/// NMSE goodness of fit,
/// `1 − Σ(P_i − P̂_i)² / Σ(P_i − mean(P))²`; 1 is a perfect fit.
pub fn nmse(reference: &OpCurve, candidate: &OpCurve) -> Result<f64> {
    check_grids(reference, candidate)?;
    let r: Vec<f64> = reference.ops().collect();
    let c: Vec<f64> = candidate.ops().collect();
    nmse_values(&r, &c)
}

/// NMSE computed on `log10 OP` rather than on raw probabilities.
///
/// Outage curves are judged on a log axis, where a factor-of-two miss
/// at 1e-8 matters as much as one at 1e-1; the raw-probability score is
/// dominated entirely by the low-SNR end of the grid. Zero OPs are
/// floored at 1e-300 before taking the logarithm.
pub fn nmse_log10(reference: &OpCurve, candidate: &OpCurve) -> Result<f64> {
    check_grids(reference, candidate)?;
    let tf = |p: f64| p.max(1e-300).log10();
    let r: Vec<f64> = reference.ops().map(tf).collect();
    let c: Vec<f64> = candidate.ops().map(tf).collect();
    nmse_values(&r, &c)
}

fn median(mut times: Vec<f64>) -> f64 {
    times.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = times.len();
    if n % 2 == 1 {
        times[n / 2]
    } else {
        0.5 * (times[n / 2 - 1] + times[n / 2])
    }
}

fn time_median<F: FnMut() -> Result<Vec<f64>>>(reps: usize, mut f: F) -> Result<(Vec<f64>, f64)> {
    let mut out = Vec::new();
    let mut times = Vec::with_capacity(reps);
    for _ in 0..reps {
        let t0 = Instant::now();
        out = f()?;
        times.push(t0.elapsed().as_secs_f64());
    }
    Ok((out, median(times)))
}

/// Evaluate exact, Gamma-approximate, and asymptotic OP over the same
/// `γ̄` grid, timing each method (median of `repetitions` runs,
/// single-threaded) and scoring the approximation's NMSE against the
/// exact curve.
pub fn benchmark_methods(
    cfg: &FasConfig,
    prof: &CorrelationProfile,
    gamma_th: f64,
    gamma_bar_db_grid: &[f64],
    repetitions: usize,
    settings: &QuadratureSettings,
) -> Result<BenchmarkRecord> {
    if repetitions < 3 {
        return Err(FasError::Domain("repetitions must be >= 3".into()));
    }
    if gamma_bar_db_grid.is_empty() {
        return Err(FasError::Domain("empty SNR grid".into()));
    }
    let grid_linear: Vec<f64> = gamma_bar_db_grid
        .iter()
        .map(|&db| crate::analysis::snr_threshold_linear(db))
        .collect();
    let checksum: f64 = grid_linear.iter().sum();

    let (exact_vals, t_exact) = time_median(repetitions, || {
        grid_linear
            .iter()
            .map(|&gb| exact_op(cfg, prof, gamma_th, gb, settings))
            .collect()
    })?;
    let (approx_vals, t_approx) = time_median(repetitions, || {
        let fit = gamma_fit(cfg, prof)?;
        grid_linear.iter().map(|&gb| approx_op(&fit, gamma_th, gb)).collect()
    })?;
    let (_asym_vals, t_asym) = time_median(repetitions, || {
        let fit = gamma_fit(cfg, prof)?;
        grid_linear.iter().map(|&gb| asymptotic_op(&fit, gamma_th, gb)).collect()
    })?;
    // all three methods must have seen the identical grid
    assert_eq!(checksum, grid_linear.iter().sum::<f64>());

    let to_curve = |method, vals: &[f64]| -> Result<OpCurve> {
        OpCurve::new(
            method,
            gamma_bar_db_grid
                .iter()
                .zip(vals)
                .map(|(&db, &op)| CurvePoint { gamma_bar_db: db, op })
                .collect(),
        )
    };
    let exact_curve = to_curve(Method::Exact, &exact_vals)?;
    let approx_curve = to_curve(Method::GammaApprox, &approx_vals)?;
    let score = nmse_log10(&exact_curve, &approx_curve)?;

    Ok(BenchmarkRecord {
        label: format!("N={} W={} m={}", cfg.n, cfg.w, cfg.m),
        exact_seconds: t_exact,
        approx_seconds: t_approx,
        asymptotic_seconds: t_asym,
        time_reduction_percent: 100.0 * (1.0 - t_approx / t_exact),
        nmse: score,
        peak_alloc_bytes: 0,
    })
}
