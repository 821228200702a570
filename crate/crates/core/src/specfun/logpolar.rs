//! Overflow-safe complex values stored as `(log |z|, arg z)`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Div, Mul};

use num_complex::Complex64;

/// Largest `|log_mag|` for which `exp(log_mag)` is comfortably a normal `f64`.
const REPRESENTABLE_LOG: f64 = 700.0;

/// Reduce an angle to `(-π, π]`.
pub fn wrap_phase(phase: f64) -> f64 {
    let mut p = phase.rem_euclid(2.0 * PI);
    if p > PI {
        p -= 2.0 * PI;
    }
    p
}

/// A complex number as natural-log magnitude plus phase.
///
/// Products add log-magnitudes and phases, so values like ξ(1/2 + it) that
/// decay as `e^{-πt/4}` never underflow. When `is_zero` is set the other two
/// fields carry no meaning.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogPolarComplex {
    pub log_mag: f64,
    pub phase: f64,
    pub is_zero: bool,
}

impl LogPolarComplex {
    pub const ZERO: Self = Self {
        log_mag: f64::NEG_INFINITY,
        phase: 0.0,
        is_zero: true,
    };

    pub const ONE: Self = Self {
        log_mag: 0.0,
        phase: 0.0,
        is_zero: false,
    };

    pub fn new(log_mag: f64, phase: f64) -> Self {
        Self {
            log_mag,
            phase: wrap_phase(phase),
            is_zero: false,
        }
    }

    /// Build from a complex logarithm `w`, i.e. the value `e^w`.
    pub fn from_log(w: Complex64) -> Self {
        Self::new(w.re, w.im)
    }

    pub fn from_complex(z: Complex64) -> Self {
        if z.re == 0.0 && z.im == 0.0 {
            return Self::ZERO;
        }
        Self::new(z.norm().ln(), z.arg())
    }

    pub fn from_real(x: f64) -> Self {
        Self::from_complex(Complex64::new(x, 0.0))
    }

    /// `e^{iθ}`.
    pub fn unit(theta: f64) -> Self {
        Self::new(0.0, theta)
    }

    /// The plain complex value, or `None` when its magnitude is outside the
    /// range of normal doubles.
    pub fn to_complex(self) -> Option<Complex64> {
        if self.is_zero {
            return Some(Complex64::new(0.0, 0.0));
        }
        if self.log_mag.abs() > REPRESENTABLE_LOG {
            return None;
        }
        Some(Complex64::from_polar(self.log_mag.exp(), self.phase))
    }

    /// The value divided by `e^{log_scale}`, always returned as a plain complex
    /// number (may underflow to zero or overflow if the scale is poorly chosen).
    pub fn scaled(self, log_scale: f64) -> Complex64 {
        if self.is_zero {
            return Complex64::new(0.0, 0.0);
        }
        Complex64::from_polar((self.log_mag - log_scale).exp(), self.phase)
    }

    pub fn conj(self) -> Self {
        if self.is_zero {
            return self;
        }
        Self::new(self.log_mag, -self.phase)
    }

    pub fn recip(self) -> Self {
        assert!(!self.is_zero, "reciprocal of zero");
        Self::new(-self.log_mag, -self.phase)
    }

    /// Multiply by `e^{iθ}`.
    pub fn rotate(self, theta: f64) -> Self {
        if self.is_zero {
            return self;
        }
        Self::new(self.log_mag, self.phase + theta)
    }

    /// Sign of the real part (`0` for zero), used for values known to be real.
    pub fn real_sign(self) -> i8 {
        if self.is_zero {
            return 0;
        }
        let c = self.phase.cos();
        if c > 0.0 {
            1
        } else if c < 0.0 {
            -1
        } else {
            0
        }
    }
}

impl Mul for LogPolarComplex {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        if self.is_zero || rhs.is_zero {
            return Self::ZERO;
        }
        Self::new(self.log_mag + rhs.log_mag, self.phase + rhs.phase)
    }
}

impl Div for LogPolarComplex {
    type Output = Self;

    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl fmt::Display for LogPolarComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero {
            write!(f, "0")
        } else {
            write!(f, "exp({} + {}i)", self.log_mag, self.phase)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn wrap_phase_range() {
        assert_eq!(wrap_phase(PI), PI);
        assert_eq!(wrap_phase(-PI), PI);
        assert!((wrap_phase(3.0 * PI / 2.0) + PI / 2.0).abs() < 1e-15);
        assert_eq!(wrap_phase(0.0), 0.0);
    }

    #[test]
    fn tiny_products_stay_finite() {
        let a = LogPolarComplex::new(-2000.0, 1.0);
        let b = LogPolarComplex::new(-1500.0, 3.0);
        let c = a * b;
        assert_eq!(c.log_mag, -3500.0);
        assert!((c.phase - wrap_phase(4.0)).abs() < 1e-15);
        assert!(c.to_complex().is_none());
        let back = c / b;
        assert!((back.log_mag + 2000.0).abs() < 1e-12);
    }

    #[test]
    fn zero_absorbs() {
        let a = LogPolarComplex::new(3.0, 1.0);
        assert!((a * LogPolarComplex::ZERO).is_zero);
        assert_eq!(LogPolarComplex::from_real(0.0), LogPolarComplex::ZERO);
        assert_eq!(LogPolarComplex::ZERO.real_sign(), 0);
    }

    #[test]
    fn real_signs() {
        assert_eq!(LogPolarComplex::from_real(-2.0).real_sign(), -1);
        assert_eq!(LogPolarComplex::from_real(2.0).real_sign(), 1);
    }

    proptest! {
        #[test]
        fn multiplication_matches_complex(
            ar in -10.0..10.0f64, ai in -10.0..10.0f64,
            br in -10.0..10.0f64, bi in -10.0..10.0f64,
        ) {
            let a = Complex64::new(ar, ai);
            let b = Complex64::new(br, bi);
            prop_assume!(a.norm() > 1e-3 && b.norm() > 1e-3);
            let prod = (LogPolarComplex::from_complex(a) * LogPolarComplex::from_complex(b))
                .to_complex()
                .unwrap();
            prop_assert!((prod - a * b).norm() <= 1e-13 * (a * b).norm());
            let p = LogPolarComplex::from_complex(a);
            prop_assert!(p.phase > -PI && p.phase <= PI);
        }
    }
}
