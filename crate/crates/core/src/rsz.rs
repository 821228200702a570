//! Hyperbolic Riemann–Siegel expansion of `ξ(1/2 + ε + it)`.
//!
//! `Z(t, ε) = 2 Σ_{n≤N} cosh(ε ln√(t/2πn²))/√n · cos(ϑ_n)
//!          + 2i Σ_{n≤N} sinh(ε ln√(t/2πn²))/√n · sin(ϑ_n) + R₀`,
//! with `ϑ_n = t ln√(t/2eπn²) − π/8`, `N = ⌊√(t/2π)⌋`, and
//! `−ξ / (F(t) e^{iεπ/4}) ≈ Z(t, ε)`.

use std::f64::consts::{FRAC_PI_8, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::xi::{xi_riemann, StripPoint};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RszTerms {
    pub n: u64,
    /// `√(t/2π) − N`.
    pub p: f64,
    pub cosh_sum: f64,
    pub sinh_sum: f64,
    pub r0: f64,
    pub f_scale_log: f64,
}

/// `(N, p)` for height `t`.
pub fn split_height(t: f64) -> (u64, f64) {
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor();
    (n as u64, a - n)
}

/// `Z(t, ε)` and its term breakdown; `R₀` enters the real part.
pub fn rsz_eval(t: f64, eps: f64) -> Result<(Complex64, RszTerms)> {
    if !(t >= 2.0 * PI) || !t.is_finite() {
        return Err(Error::Domain(format!("expansion needs t >= 2π, got {t}")));
    }
    if !(eps.abs() <= 0.5) {
        return Err(Error::Domain(format!("|eps| must be at most 1/2, got {eps}")));
    }
    let (n, p) = split_height(t);
    let half_log = 0.5 * (t / (2.0 * PI)).ln();
    let mut cosh_sum = 0.0;
    let mut sinh_sum = 0.0;
    for k in 1..=n {
        let kf = k as f64;
        let lk = kf.ln();
        // ln√(t/2πk²) and t ln√(t/2eπk²)
        let x = half_log - lk;
        let theta = t * (x - 0.5) - FRAC_PI_8;
        let w = 1.0 / kf.sqrt();
        cosh_sum += (eps * x).cosh() * w * theta.cos();
        sinh_sum += (eps * x).sinh() * w * theta.sin();
    }
    let cosh_sum = 2.0 * cosh_sum;
    let sinh_sum = 2.0 * sinh_sum;
    let r0 = r0(t, p, n);
    let terms = RszTerms {
        n,
        p,
        cosh_sum,
        sinh_sum,
        r0,
        f_scale_log: f_scale(t),
    };
    Ok((Complex64::new(cosh_sum + r0, sinh_sum), terms))
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `C₀(p) = cos(2π(p² − p − 1/16)) / cos(2πp)`, continuous at `p = 1/4, 3/4`.
///
/// With `u = p − 1/4`, `v = p − 3/4` this is `−sin(2πuv)/sin(2πu)`, which
/// equals `−v sinc(2πuv)/sinc(2πu)` and `u sinc(2πuv)/sinc(2πv)`; each form
/// is 0/0-free on its half of `[0, 1]`.
pub fn c0(p: f64) -> f64 {
    let u = p - 0.25;
    let v = p - 0.75;
    let s = sinc(2.0 * PI * u * v);
    if p <= 0.5 {
        -v * s / sinc(2.0 * PI * u)
    } else {
        u * s / sinc(2.0 * PI * v)
    }
}

/// `R₀ = (−1)^{N−1} (2π/t)^{1/4} C₀(p)`.
pub fn r0(t: f64, p: f64, n: u64) -> f64 {
    let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
    sign * (2.0 * PI / t).powf(0.25) * c0(p)
}

/// `ln F(t)` for `F(t) = (π/2)^{1/4} t^{7/4} e^{−πt/4}`.
pub fn f_scale(t: f64) -> f64 {
    0.25 * (PI / 2.0).ln() + 1.75 * t.ln() - PI / 4.0 * t
}

/// `−ξ(1/2 + ε + it) / (F(t) e^{iεπ/4})` from the direct evaluation of `ξ`.
pub fn direct_z(t: f64, eps: f64) -> Result<Complex64> {
    let xi = xi_riemann(StripPoint::new(t, eps))?;
    if xi.value.is_zero {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let log_mag = xi.value.log_mag - f_scale(t);
    let phase = xi.value.phase + PI - eps * PI / 4.0;
    Ok(Complex64::from_polar(log_mag.exp(), phase))
}

/// The acceptance envelope for `|Z(t, 0) − direct_z(t, 0)|`.
pub fn line_envelope(t: f64) -> f64 {
    3.0 * (2.0 * PI / t).powf(0.75)
}

/// Bound on how much `|Z|²` can move from neglecting the ε-dependence of
/// `R₀`: `2|R₀|·|Z| + R₀²`.
pub fn r0_neglect_bound(z: Complex64, terms: &RszTerms) -> f64 {
    let r = terms.r0.abs();
    2.0 * r * z.norm() + r * r
}

/// One row of the figure-1 data.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Figure1Row {
    pub t: f64,
    pub eps: f64,
    pub z2: f64,
}

/// `|Z(t, ε)|²` for `ε` evenly spaced on `[0, 1/2]`, per `t`.
pub fn figure1_rows(ts: &[f64], eps_steps: usize) -> Result<Vec<Figure1Row>> {
    if eps_steps < 2 {
        return Err(Error::Domain("need at least two eps steps".into()));
    }
    let mut rows = Vec::with_capacity(ts.len() * eps_steps);
    for &t in ts {
        for k in 0..eps_steps {
            let eps = 0.5 * k as f64 / (eps_steps - 1) as f64;
            let (z, _) = rsz_eval(t, eps)?;
            rows.push(Figure1Row {
                t,
                eps,
                z2: z.norm_sqr(),
            });
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c0_values() {
        let cos_pi_8 = (PI / 8.0).cos();
        assert!((c0(0.0) - cos_pi_8).abs() < 1e-15);
        assert!((c0(1.0) - cos_pi_8).abs() < 1e-15);
        assert!((c0(0.5) - 0.382_683_432_365_089_8).abs() < 1e-15);
        let raw = |p: f64| (2.0 * PI * (p * p - p - 1.0 / 16.0)).cos() / (2.0 * PI * p).cos();
        for p in [0.1, 0.2, 0.3, 0.45, 0.6, 0.7, 0.8, 0.95] {
            assert!((c0(p) - raw(p)).abs() < 1e-13, "{p}");
        }
        // removable points and their neighbourhoods
        for p in [0.25, 0.75] {
            assert!((c0(p) - 0.5).abs() < 1e-15);
            assert!((c0(p + 1e-7) - c0(p)).abs() < 1e-6);
            assert!((c0(p - 1e-7) - c0(p)).abs() < 1e-6);
        }
    }

    #[test]
    fn r0_examples() {
        let t = 2.0 * PI * 4.0;
        let (n, p) = split_height(t);
        assert_eq!((n, p), (2, 0.0));
        let want = -(2.0 * PI / t).powf(0.25) * (PI / 8.0).cos();
        assert!((r0(t, p, n) - want).abs() < 1e-15);
        assert!((want + 0.6533).abs() < 1e-4);
        let ratio = r0(100.0 * t, 0.0, 1) / r0(t, 0.0, 1);
        assert!((ratio - 10f64.powf(-0.5)).abs() < 1e-14);
    }

    #[test]
    fn f_scale_examples() {
        assert!((f_scale(1.0) + 0.6725).abs() < 1e-4);
        assert!(f_scale(3.0) > f_scale(3.1));
    }

    #[test]
    fn line_value_is_real() {
        for t in [10.0, 100.0, 523.7] {
            let (z, terms) = rsz_eval(t, 0.0).unwrap();
            assert_eq!(z.im, 0.0);
            assert_eq!(terms.sinh_sum, 0.0);
        }
        assert!(rsz_eval(6.0, 0.0).is_err());
        assert!(rsz_eval(100.0, 0.6).is_err());
    }

    #[test]
    fn sign_convention_at_one_hundred() {
        let (z, _) = rsz_eval(100.0, 0.0).unwrap();
        let d = direct_z(100.0, 0.0).unwrap();
        assert!(z.re.signum() == d.re.signum(), "{z} vs {d}");
        assert!((z - d).norm() < line_envelope(100.0));
    }

    #[test]
    fn modulus_even_in_eps_up_to_r0() {
        for t in [100.0, 300.0] {
            for eps in [0.1, 0.3, 0.5] {
                let (a, ta) = rsz_eval(t, eps).unwrap();
                let (b, _) = rsz_eval(t, -eps).unwrap();
                assert!((a.norm_sqr() - b.norm_sqr()).abs() <= 2.0 * r0_neglect_bound(a, &ta));
                // without R₀ the two sums give an exactly even modulus
                let a0 = Complex64::new(a.re - ta.r0, a.im);
                let b0 = Complex64::new(b.re - ta.r0, b.im);
                assert!((a0.norm_sqr() - b0.norm_sqr()).abs() < 1e-12 * a0.norm_sqr().max(1.0));
            }
        }
    }
}
