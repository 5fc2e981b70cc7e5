//! Adaptive Gauss–Kronrod (G7–K15) quadrature on a finite interval.

use crate::error::{FasError, Result};
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Tolerances and subdivision budget for the adaptive integrator.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 200,
        }
    }
}

// K15 abscissae (positive half) and weights; wg holds the embedded G7
// weights for the odd-indexed abscissae.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_17,
    0.207_784_955_007_898_26,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_225,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_69,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_94,
    0.417_959_183_673_469_4,
];

/// One K15 panel: returns (integral, error estimate).
fn qk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);

    let mut res_gauss = WG[3] * f_center;
    let mut res_kronrod = WGK[7] * f_center;
    let mut res_abs = res_kronrod.abs();
    let mut fv = [0.0f64; 15];
    fv[7] = f_center;

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        res_kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            res_gauss += WG[j / 2] * (f1 + f2);
        }
    }

    let mean = 0.5 * res_kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv[j] - mean).abs() + (fv[14 - j] - mean).abs());
    }
    let res_asc = res_asc * half.abs();
    let res_abs = res_abs * half.abs();

    let result = res_kronrod * half;
    let mut err = ((res_kronrod - res_gauss) * half).abs();
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    (result, err)
}

struct Segment {
    a: f64,
    b: f64,
    result: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.err == other.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err.partial_cmp(&other.err).unwrap_or(Ordering::Equal)
    }
}

/// Adaptive integration of `f` over `[a, b]`.
///
/// Splits the panel with the largest error estimate until the total
/// estimate satisfies `max(abs_tol, rel_tol · |I|)`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, settings: &QuadratureSettings) -> Result<f64> {
    if a == b {
        return Ok(0.0);
    }
    let (result, err) = qk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, result, err });
    let mut total = result;
    let mut total_err = err;

    for _ in 0..settings.max_subdivisions {
        if total_err <= settings.abs_tol.max(settings.rel_tol * total.abs()) {
            return Ok(total);
        }
        let worst = heap.pop().expect("heap nonempty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid == worst.a || mid == worst.b {
            // interval no longer splittable; keep its estimate
            total_err -= worst.err;
            continue;
        }
        let (r1, e1) = qk15(&f, worst.a, mid);
        let (r2, e2) = qk15(&f, mid, worst.b);
        total += r1 + r2 - worst.result;
        total_err += e1 + e2 - worst.err;
        heap.push(Segment { a: worst.a, b: mid, result: r1, err: e1 });
        heap.push(Segment { a: mid, b: worst.b, result: r2, err: e2 });
    }
    if total_err <= settings.abs_tol.max(settings.rel_tol * total.abs()) {
        Ok(total)
    } else {
        Err(FasError::Convergence {
            context: "adaptive quadrature",
            detail: format!("error estimate {total_err:.3e} after {} subdivisions", settings.max_subdivisions),
        })
    }
}
