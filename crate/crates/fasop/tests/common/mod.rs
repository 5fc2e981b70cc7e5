//! Brute-force reference implementations used to cross-check the
//! library's special functions. Everything here is deliberately slow
//! and structurally unrelated to the code under test: plain composite
//! quadrature of the defining integrals, power series summed term by
//! term.

#![allow(dead_code)]

/// Composite Simpson rule with `n` (even) subintervals.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    assert!(n >= 2 && n % 2 == 0);
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// Regularized lower incomplete gamma `P(a, x)` by integrating the
/// density, normalizing with a second integral for `Γ(a)`. The
/// substitution `t = u⁶` tames the `t^{a−1}` endpoint, whose higher
/// derivatives otherwise blow up at 0 for non-integer `a` and wreck
/// Simpson's h⁴ convergence.
pub fn reg_lower_gamma_oracle(a: f64, x: f64) -> f64 {
    assert!(a >= 1.0);
    let f = |u: f64| 6.0 * u.powf(6.0 * a - 1.0) * (-u.powi(6)).exp();
    let upper = a + 40.0 * a.sqrt() + 50.0;
    let gamma_a = simpson(&f, 0.0, upper.powf(1.0 / 6.0), 100_000);
    if x <= 0.0 {
        return 0.0;
    }
    simpson(&f, 0.0, x.min(upper).powf(1.0 / 6.0), 50_000) / gamma_a
}

/// Modified Bessel function `I_ν(z)` for `ν ≥ 0` by its power series.
pub fn bessel_i_series(nu: f64, z: f64) -> f64 {
    let half = z / 2.0;
    // first term (z/2)^ν / Γ(ν+1), in logs to dodge overflow at large ν
    let mut term = (nu * half.ln() - ln_gamma_stirling(nu + 1.0)).exp();
    let mut sum = term;
    for k in 1..500 {
        term *= half * half / (k as f64 * (k as f64 + nu));
        sum += term;
        if term < sum.abs() * 1e-17 {
            return sum;
        }
    }
    sum
}

/// `ln Γ(x)` via the Stirling series with argument shift; independent
/// of the Lanczos fit used by the crate.
pub fn ln_gamma_stirling(x: f64) -> f64 {
    assert!(x > 0.0);
    let mut shift = 0.0;
    let mut z = x;
    while z < 20.0 {
        shift -= z.ln();
        z += 1.0;
    }
    let zi = 1.0 / z;
    let zi2 = zi * zi;
    let series = zi / 12.0 - zi * zi2 / 360.0 + zi * zi2 * zi2 / 1260.0
        - zi * zi2 * zi2 * zi2 / 1680.0;
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln() + series + shift
}

/// Generalized Marcum `Q_ν(a, b)` by integrating the noncentral chi
/// density `x (x/a)^{ν−1} e^{−(x²+a²)/2} I_{ν−1}(ax)` from `b` up.
pub fn marcum_q_oracle(nu: f64, a: f64, b: f64) -> f64 {
    assert!(a > 0.0 && nu >= 1.0);
    let integrand = |x: f64| {
        if x <= 0.0 {
            return 0.0;
        }
        x * (x / a).powf(nu - 1.0)
            * (-(x * x + a * a) / 2.0).exp()
            * bessel_i_series(nu - 1.0, a * x)
    };
    let upper = (a + 10.0).max(b + 1.0);
    if b >= upper {
        return 0.0;
    }
    simpson(integrand, b, upper, 20_000)
}

/// `J0(x)` from the integral representation
/// `(1/π) ∫₀^π cos(x sin θ) dθ`; the trapezoid rule converges
/// spectrally on this periodic integrand.
pub fn bessel_j0_oracle(x: f64) -> f64 {
    let n = 4000;
    let h = std::f64::consts::PI / n as f64;
    let f = |theta: f64| (x * theta.sin()).cos();
    let mut acc = 0.5 * (f(0.0) + f(std::f64::consts::PI));
    for i in 1..n {
        acc += f(i as f64 * h);
    }
    acc * h / std::f64::consts::PI
}
