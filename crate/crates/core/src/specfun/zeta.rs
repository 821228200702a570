//! Riemann and Hurwitz zeta by Euler–Maclaurin summation.
//!
//! For `ζ(s, a) = Σ_{n≥0} (n + a)^{-s}` the first `N` terms are summed
//! directly and the tail is replaced by the integral, the half end-point term
//! and eight Bernoulli corrections. The truncation bound is the modulus of the
//! first omitted correction times `|s + 2M + 1| / (σ + 2M + 1)`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Accuracy report attached to every series evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SeriesError {
    pub truncation_terms: usize,
    /// Truncation bound plus an estimate of accumulated rounding.
    pub estimated_abs_error: f64,
    pub estimated_rel_error: f64,
}

impl SeriesError {
    pub const EXACT: Self = Self {
        truncation_terms: 0,
        estimated_abs_error: 0.0,
        estimated_rel_error: 0.0,
    };
}

pub const DEFAULT_ERROR_TARGET: f64 = 1e-14;

pub const BERNOULLI_ORDER: usize = 8;

const MAX_TERMS: usize = 1 << 21;

/// `B_{2k} / (2k)!` for k = 1..=9; the ninth is only used for the error bound.
const BERNOULLI_OVER_FACTORIAL: [f64; BERNOULLI_ORDER + 1] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
    43_867.0 / 5_109_094_217_170_944_000.0,
];

/// Direct-sum length used before any adaptive growth: `max(10, ⌈1.3 |Im s|⌉)`.
pub fn default_cutoff(s: Complex64) -> usize {
    (1.3 * s.im.abs()).ceil().max(10.0) as usize
}

struct Partial {
    value: Complex64,
    truncation: f64,
    rounding: f64,
}

fn euler_maclaurin(s: Complex64, a: f64, n: usize) -> Partial {
    let (sigma, t) = (s.re, s.im);
    let eps = f64::EPSILON;
    let mut head = Complex64::new(0.0, 0.0);
    let mut rounding = 0.0;
    for k in 0..n {
        let l = (k as f64 + a).ln();
        let mag = (-sigma * l).exp();
        let (sin, cos) = (-t * l).sin_cos();
        head += Complex64::new(mag * cos, mag * sin);
        rounding += mag * (1.0 + t.abs() * l);
    }
    let x = n as f64 + a;
    let lx = x.ln();
    let x_pow = (-s * lx).exp();
    let mut tail = x_pow * x / (s - 1.0) + 0.5 * x_pow;

    // k-th correction: B_{2k}/(2k)! · s(s+1)…(s+2k-2) · x^{-s-2k+1}
    let inv_x2 = 1.0 / (x * x);
    let mut factor = s * x_pow / x;
    for (k, coeff) in BERNOULLI_OVER_FACTORIAL[..BERNOULLI_ORDER].iter().enumerate() {
        tail += *coeff * factor;
        let m = 2.0 * (k as f64 + 1.0);
        factor *= (s + m - 1.0) * (s + m) * inv_x2;
    }
    let first_omitted = BERNOULLI_OVER_FACTORIAL[BERNOULLI_ORDER].abs() * factor.norm();
    let order_shift = 2.0 * BERNOULLI_ORDER as f64 + 1.0;
    let truncation = if sigma + order_shift > 0.0 {
        first_omitted * (s + order_shift).norm() / (sigma + order_shift)
    } else {
        f64::INFINITY
    };
    rounding += tail.norm() * (1.0 + t.abs() * lx);
    Partial {
        value: head + tail,
        truncation,
        rounding: 4.0 * eps * rounding,
    }
}

fn finish(p: Partial, n: usize) -> (Complex64, SeriesError) {
    let abs = p.truncation + p.rounding;
    let norm = p.value.norm();
    let rel = if norm > 0.0 { abs / norm } else { f64::INFINITY };
    (
        p.value,
        SeriesError {
            truncation_terms: n,
            estimated_abs_error: abs,
            estimated_rel_error: rel,
        },
    )
}

fn check_args(s: Complex64, a: f64) -> Result<()> {
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole(s));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("Hurwitz parameter a = {a} outside (0, 1]")));
    }
    if !s.re.is_finite() || !s.im.is_finite() {
        return Err(Error::Domain(format!("non-finite argument {s}")));
    }
    Ok(())
}

/// Hurwitz zeta with a fixed direct-sum length `n` (no adaptivity).
pub fn hurwitz_zeta_with_terms(s: Complex64, a: f64, n: usize) -> Result<(Complex64, SeriesError)> {
    check_args(s, a)?;
    Ok(finish(euler_maclaurin(s, a, n.max(1)), n.max(1)))
}

/// Hurwitz zeta `ζ(s, a)` for `0 < a <= 1`.
///
/// Starts from [`default_cutoff`] and grows the direct sum until the
/// truncation bound is below `error_target`.
pub fn hurwitz_zeta(s: Complex64, a: f64, error_target: f64) -> Result<(Complex64, SeriesError)> {
    check_args(s, a)?;
    let mut n = default_cutoff(s);
    loop {
        let p = euler_maclaurin(s, a, n);
        if p.truncation <= error_target {
            return Ok(finish(p, n));
        }
        if n >= MAX_TERMS {
            return Err(Error::NonConvergence {
                s,
                target: error_target,
                achieved: p.truncation,
                terms: n,
            });
        }
        n = (n * 2).min(MAX_TERMS);
    }
}

/// Riemann zeta `ζ(s)` continued to the whole plane minus `s = 1`.
pub fn zeta_em(s: Complex64, error_target: f64) -> Result<(Complex64, SeriesError)> {
    hurwitz_zeta(s, 1.0, error_target)
}

pub fn zeta_em_with_terms(s: Complex64, n: usize) -> Result<(Complex64, SeriesError)> {
    hurwitz_zeta_with_terms(s, 1.0, n)
}
