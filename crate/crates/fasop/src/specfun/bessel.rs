//! Bessel function of the first kind, order zero.

/// `J0(x)` for finite `x`. Even function, `|J0| ≤ 1`.
///
/// Power series for `|x| < 9`; Miller downward recurrence with the
/// normalization `J0 + 2·Σ J_{2k} = 1` beyond. The boundary is where the
/// two evaluations agree to well under 1e-12.
pub fn bessel_j0(x: f64) -> f64 {
    let ax = x.abs();
    if ax < 9.0 {
        j0_series(ax)
    } else {
        j0_miller(ax)
    }
}

fn j0_series(x: f64) -> f64 {
    let q = 0.25 * x * x;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..200 {
        let kf = k as f64;
        term *= -q / (kf * kf);
        sum += term;
        if term.abs() < 1e-18 * sum.abs().max(1e-3) {
            break;
        }
    }
    sum
}

fn j0_miller(x: f64) -> f64 {
    // Start high enough that the seed error has decayed below f64 noise:
    // orders past x + O(x^{1/3}) decay like an Airy tail.
    let start = (x + 14.0 * x.cbrt() + 20.0) as usize;
    let start = start + (start & 1); // even
    let mut fp1 = 0.0_f64; // J_{n+1}
    let mut f = 1e-30_f64; // J_n (arbitrary seed scale)
    let mut norm = 0.0_f64;
    for n in (1..=start).rev() {
        let fm1 = (2.0 * n as f64 / x) * f - fp1;
        fp1 = f;
        f = fm1;
        if n & 1 == 0 {
            norm += fp1; // accumulates J_n for even n >= 2
        }
        if f.abs() > 1e100 {
            f *= 1e-100;
            fp1 *= 1e-100;
            norm *= 1e-100;
        }
    }
    // f now holds the unnormalized J_0
    f / (2.0 * norm + f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_at_zero() {
        assert_eq!(bessel_j0(0.0), 1.0);
    }

    #[test]
    fn j0_first_zero() {
        // first zero located by the power-series oracle in tests/oracles.rs
        assert!(bessel_j0(2.404825557695773).abs() < 1e-10);
    }

    #[test]
    fn j0_reference_values() {
        // cross-checked against the integral representation in tests/oracles.rs
        assert!((bessel_j0(10.0) - (-0.245_935_764_451_348_34)).abs() < 1e-13);
        assert!((bessel_j0(std::f64::consts::PI) - (-0.304_242_177_644_093_86)).abs() < 1e-13);
    }

    #[test]
    fn j0_even_and_bounded() {
        for i in 0..500 {
            let x = 0.37 * i as f64;
            let v = bessel_j0(x);
            assert_eq!(v, bessel_j0(-x));
            assert!(v.abs() <= 1.0 + 1e-14, "x = {x}: {v}");
        }
    }

    #[test]
    fn j0_branches_agree_at_boundary() {
        for &x in &[8.5, 8.9, 9.0, 9.1, 9.5, 11.0] {
            let s = j0_series(x);
            let m = j0_miller(x);
            assert!((s - m).abs() < 1e-12, "x = {x}: series {s} vs miller {m}");
        }
    }
}
