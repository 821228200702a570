//! Complex log-gamma.
//!
//! Lanczos approximation (g = 7, nine coefficients) on `Re z >= 1/2`, and the
//! upward recurrence `lnΓ(z) = lnΓ(z + n) - Σ ln(z + k)` to the left of that.
//! The result is the analytic `log Γ` (continuous in `Im z`, matching the
//! usual `loggamma` convention), not the principal log of `Γ(z)`.


use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln √(2π)`
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Analytic log-gamma for complex `z`.
///
/// Fails with [`Error::Pole`] at non-positive integers.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0 {
        return Err(Error::Pole(z));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("log_gamma of non-finite {z}")));
    }
    if z.re >= 0.5 {
        return Ok(lanczos(z));
    }
    let shift = (0.5 - z.re).ceil();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    for _ in 0..shift as u64 {
        acc += w.ln();
        w += 1.0;
    }
    Ok(lanczos(w) - acc)
}

fn lanczos(z: Complex64) -> Complex64 {
    let zm1 = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (k, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (zm1 + k as f64);
    }
    let base = zm1 + LANCZOS_G + 0.5;
    (zm1 + 0.5) * base.ln() - base + LN_SQRT_2PI + series.ln()
}

/// `log Γ` for real positive arguments.
pub fn log_gamma_real(x: f64) -> Result<f64> {
    log_gamma(Complex64::new(x, 0.0)).map(|w| w.re)
}
