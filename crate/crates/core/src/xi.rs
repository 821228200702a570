//! Completed ξ functions in log-polar form.
//!
//! * `ξ(s) = Γ(s/2 + 1) (s - 1) ζ(s) π^{-s/2}`
//! * `ξ(s, χ) = (q/π)^{(s+α)/2} Γ((s+α)/2) L(s, χ)` for primitive, non-principal
//!   `χ`, with `L(s, χ) = q^{-s} Σ_r χ(r) ζ(s, r/q)`.
//!
//! `η` is `ξ` rotated by half the phase of the root number `W = i^α √q / τ(χ)`
//! so that it is real on the critical line (`η = ξ` for Riemann). The leftover
//! sign is fixed by making `η(1/2 + i t₀) > 0` at the first `t₀ >= 0` where `η`
//! is numerically nonzero.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::characters::{DirichletCharacter, GaussSumValue};
use crate::error::{Error, Result};
use crate::specfun::{
    hurwitz_zeta, log_gamma, zeta_em, LogPolarComplex, SeriesError, DEFAULT_ERROR_TARGET,
};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `s = 1/2 + eps + i t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct StripPoint {
    pub t: f64,
    pub eps: f64,
}

impl StripPoint {
    pub fn new(t: f64, eps: f64) -> Self {
        Self { t, eps }
    }

    pub fn on_line(t: f64) -> Self {
        Self { t, eps: 0.0 }
    }

    pub fn from_s(s: Complex64) -> Self {
        Self {
            t: s.im,
            eps: s.re - 0.5,
        }
    }

    pub fn s(self) -> Complex64 {
        Complex64::new(0.5 + self.eps, self.t)
    }

    /// `1 - s`.
    pub fn reflected(self) -> Self {
        Self {
            t: -self.t,
            eps: -self.eps,
        }
    }

    /// Mirror image across the critical line, `1 - s̄`.
    pub fn mirrored(self) -> Self {
        Self {
            t: self.t,
            eps: -self.eps,
        }
    }
}

impl fmt::Display for StripPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(t={}, eps={})", self.t, self.eps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XiEvaluation {
    pub point: StripPoint,
    pub value: LogPolarComplex,
    /// Error of the underlying ζ or L series, relative to that series' value.
    pub series_error: SeriesError,
    /// Sum of the magnitudes of the logarithmic pieces that were added up;
    /// rounding in `log_mag` and `phase` is a few ulps of this.
    pub log_scale: f64,
}

impl XiEvaluation {
    /// Absolute uncertainty of both `value.log_mag` and `value.phase`.
    pub fn log_uncertainty(&self) -> f64 {
        self.series_error.estimated_rel_error + 8.0 * f64::EPSILON * self.log_scale
    }
}

/// The value of `η` on the critical line, where it is real.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineValue {
    pub t: f64,
    /// `-1`, `0` or `1`; zero when the series value is below its error bound.
    pub sign: i8,
    pub log_mag: f64,
    /// `|Im η| / |η|`.
    pub imag_ratio: f64,
}

impl LineValue {
    /// `η(t) / e^{log_scale}` as a plain real number.
    pub fn scaled(&self, log_scale: f64) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * (self.log_mag - log_scale).exp()
        }
    }
}

/// Precomputed data for `ξ(s, χ)`.
#[derive(Clone, Debug)]
pub struct DirichletXi {
    character: DirichletCharacter,
    gauss: GaussSumValue,
    root_number: Complex64,
    eta_rotation: f64,
    /// `(r/q, χ(r))` over units `r`.
    terms: Vec<(f64, Complex64)>,
}

impl DirichletXi {
    pub fn character(&self) -> &DirichletCharacter {
        &self.character
    }

    pub fn gauss_sum(&self) -> GaussSumValue {
        self.gauss
    }

    /// `W = i^α √q / τ(χ)`, the factor in `ξ(1 - s, χ̄) = W ξ(s, χ)`.
    pub fn root_number(&self) -> Complex64 {
        self.root_number
    }
}

/// One of the completed functions the library evaluates.
#[derive(Clone, Debug)]
pub enum XiFunction {
    Riemann,
    Dirichlet(Box<DirichletXi>),
}

impl XiFunction {
    pub fn riemann() -> Self {
        Self::Riemann
    }

    /// Completed L-function of a primitive, non-principal character.
    pub fn dirichlet(character: DirichletCharacter) -> Result<Self> {
        check_primitive(&character)?;
        let q = character.modulus();
        let gauss = character.gauss_sum();
        let i_alpha = if character.parity() == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 1.0)
        };
        let root_number = i_alpha * (q as f64).sqrt() / gauss.value;
        let terms = (1..q)
            .filter_map(|r| {
                let v = character.value(r as i64);
                (v.norm() > 0.5).then_some((r as f64 / q as f64, v))
            })
            .collect();
        let mut xi = DirichletXi {
            character,
            gauss,
            root_number,
            eta_rotation: ETA_ROTATION_SIGN * 0.5 * root_number.arg(),
            terms,
        };
        let mut t0 = 0.0;
        loop {
            let v = eta_dirichlet(&xi, StripPoint::on_line(t0))?;
            match v.value.real_sign() {
                0 => t0 += 0.01,
                1 => break,
                _ => {
                    xi.eta_rotation += PI;
                    break;
                }
            }
        }
        Ok(Self::Dirichlet(Box::new(xi)))
    }

    /// Convenience: `(q, index)` or Riemann when `modulus` is `None`.
    pub fn from_label(modulus: Option<u64>, index: Option<usize>) -> Result<Self> {
        match modulus {
            None => Ok(Self::Riemann),
            Some(q) => Self::dirichlet(DirichletCharacter::new(q, index.unwrap_or(1))?),
        }
    }

    pub fn character(&self) -> Option<&DirichletCharacter> {
        match self {
            Self::Riemann => None,
            Self::Dirichlet(d) => Some(&d.character),
        }
    }

    /// Modulus used in zero-density estimates (1 for Riemann).
    pub fn conductor(&self) -> u64 {
        self.character().map_or(1, |c| c.modulus())
    }

    /// `riemann` or `q:index`.
    pub fn label(&self) -> String {
        match self {
            Self::Riemann => "riemann".into(),
            Self::Dirichlet(d) => format!("{}:{}", d.character.modulus(), d.character.index()),
        }
    }

    pub fn xi(&self, p: StripPoint) -> Result<XiEvaluation> {
        match self {
            Self::Riemann => xi_riemann(p),
            Self::Dirichlet(d) => xi_dirichlet_prepared(d, p),
        }
    }

    pub fn eta(&self, p: StripPoint) -> Result<XiEvaluation> {
        match self {
            Self::Riemann => xi_riemann(p),
            Self::Dirichlet(d) => eta_dirichlet(d, p),
        }
    }

    /// Angle θ with `η = e^{iθ} ξ`.
    pub fn eta_rotation(&self) -> f64 {
        match self {
            Self::Riemann => 0.0,
            Self::Dirichlet(d) => d.eta_rotation,
        }
    }

    /// The function the functional equation pairs with this one: itself for
    /// Riemann, the conjugate character otherwise.
    pub fn dual(&self) -> Result<Self> {
        match self {
            Self::Riemann => Ok(Self::Riemann),
            Self::Dirichlet(d) => Self::dirichlet(d.character.conjugate()),
        }
    }

    /// Real value of `η(1/2 + it)`.
    pub fn eta_on_line(&self, t: f64) -> Result<LineValue> {
        let e = self.eta(StripPoint::on_line(t))?;
        Ok(LineValue {
            t,
            sign: e.value.real_sign(),
            log_mag: e.value.log_mag,
            imag_ratio: if e.value.is_zero {
                0.0
            } else {
                e.value.phase.sin().abs()
            },
        })
    }
}

// The half-angle rotation e^{+iθ/2} is the one that makes η real: on the line
// conj ξ(s, χ) = ξ(s̄, χ̄) = W ξ(s, χ).
const ETA_ROTATION_SIGN: f64 = 1.0;

fn check_primitive(chi: &DirichletCharacter) -> Result<()> {
    if chi.is_principal() {
        return Err(Error::PrincipalCharacter {
            modulus: chi.modulus(),
            index: chi.index(),
        });
    }
    if !chi.is_primitive() {
        return Err(Error::ImprimitiveCharacter {
            modulus: chi.modulus(),
            index: chi.index(),
            conductor: chi.conductor(),
        });
    }
    Ok(())
}

/// Riemann `ξ(s)`.
pub fn xi_riemann(p: StripPoint) -> Result<XiEvaluation> {
    let s = p.s();
    let ln_pi = PI.ln();
    let lg = log_gamma(s / 2.0 + 1.0)?;
    let pi_part = -s / 2.0 * ln_pi;
    let sm1 = s - 1.0;
    // (s - 1) ζ(s) near the pole: 1 + γ (s - 1) + O((s - 1)²)
    if sm1.norm() < 1e-8 {
        let w = lg + pi_part + (1.0 + EULER_GAMMA * sm1).ln();
        return Ok(XiEvaluation {
            point: p,
            value: LogPolarComplex::from_log(w),
            series_error: SeriesError::EXACT,
            log_scale: lg.norm() + pi_part.norm(),
        });
    }
    let (z, err) = zeta_em(s, DEFAULT_ERROR_TARGET)?;
    let log_scale = lg.norm() + pi_part.norm() + sm1.ln().norm();
    if z.norm() <= err.estimated_abs_error {
        return Ok(XiEvaluation {
            point: p,
            value: LogPolarComplex::ZERO,
            series_error: err,
            log_scale,
        });
    }
    let w = lg + sm1.ln() + z.ln() + pi_part;
    Ok(XiEvaluation {
        point: p,
        value: LogPolarComplex::from_log(w),
        series_error: err,
        log_scale: log_scale + z.ln().norm(),
    })
}

/// `ξ(s, χ)` for a primitive, non-principal character.
pub fn xi_dirichlet(p: StripPoint, chi: &DirichletCharacter) -> Result<XiEvaluation> {
    match XiFunction::dirichlet(chi.clone())? {
        XiFunction::Dirichlet(d) => xi_dirichlet_prepared(&d, p),
        XiFunction::Riemann => unreachable!(),
    }
}

/// `η` for Riemann (`None`) or a primitive character.
pub fn eta(p: StripPoint, chi: Option<&DirichletCharacter>) -> Result<XiEvaluation> {
    match chi {
        None => xi_riemann(p),
        Some(c) => XiFunction::dirichlet(c.clone())?.eta(p),
    }
}

/// `L(s, χ)` with its error report, by the Hurwitz decomposition.
pub fn dirichlet_l(s: Complex64, chi: &DirichletCharacter) -> Result<(Complex64, SeriesError)> {
    let q = chi.modulus();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_err = 0.0;
    let mut terms = 0;
    for r in 1..=q {
        let v = chi.value(r as i64);
        if v.norm() < 0.5 {
            continue;
        }
        let (h, e) = hurwitz_zeta(s, r as f64 / q as f64, DEFAULT_ERROR_TARGET)?;
        sum += v * h;
        abs_err += e.estimated_abs_error;
        terms = terms.max(e.truncation_terms);
    }
    let scale = (-s * (q as f64).ln()).exp();
    let value = scale * sum;
    let abs = abs_err * scale.norm();
    Ok((
        value,
        SeriesError {
            truncation_terms: terms,
            estimated_abs_error: abs,
            estimated_rel_error: abs / value.norm(),
        },
    ))
}

fn xi_dirichlet_prepared(d: &DirichletXi, p: StripPoint) -> Result<XiEvaluation> {
    let s = p.s();
    let q = d.character.modulus() as f64;
    let alpha = f64::from(d.character.parity());
    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_err = 0.0;
    let mut n_terms = 0;
    for &(a, v) in &d.terms {
        let (h, e) = hurwitz_zeta(s, a, DEFAULT_ERROR_TARGET)?;
        sum += v * h;
        abs_err += e.estimated_abs_error;
        n_terms = n_terms.max(e.truncation_terms);
    }
    let half = (s + alpha) / 2.0;
    let lg = log_gamma(half)?;
    let q_part = half * (q.ln() - PI.ln()) - s * q.ln();
    let norm = sum.norm();
    let rel = abs_err / norm;
    let series_error = SeriesError {
        truncation_terms: n_terms,
        estimated_abs_error: abs_err,
        estimated_rel_error: if norm > 0.0 { rel } else { f64::INFINITY },
    };
    let log_scale = lg.norm() + q_part.norm();
    if norm <= abs_err {
        return Ok(XiEvaluation {
            point: p,
            value: LogPolarComplex::ZERO,
            series_error,
            log_scale,
        });
    }
    let w = q_part + lg + sum.ln();
    Ok(XiEvaluation {
        point: p,
        value: LogPolarComplex::from_log(w),
        series_error,
        log_scale: log_scale + sum.ln().norm(),
    })
}

fn eta_dirichlet(d: &DirichletXi, p: StripPoint) -> Result<XiEvaluation> {
    let mut e = xi_dirichlet_prepared(d, p)?;
    e.value = e.value.rotate(d.eta_rotation);
    Ok(e)
}

/// `ζ(s)` recovered from `ξ(1 - s)` through the functional equation; an
/// evaluation route independent of the direct series at `s`.
pub fn zeta_from_functional_equation(s: Complex64) -> Result<Complex64> {
    let reflected = xi_riemann(StripPoint::from_s(1.0 - s))?;
    let lg = log_gamma(s / 2.0 + 1.0)?;
    let denom = lg + (s - 1.0).ln() - s / 2.0 * PI.ln();
    let w = Complex64::new(reflected.value.log_mag, reflected.value.phase) - denom;
    Ok(w.exp())
}

/// Anything that can be evaluated at a strip point in log-polar form.
pub trait StripFunction: Sync {
    fn evaluate(&self, p: StripPoint) -> Result<XiEvaluation>;
}

/// A function that is real on the critical line.
pub trait LineFunction: Sync {
    fn line_value(&self, t: f64) -> Result<LineValue>;

    /// Modulus entering the zero-density heuristics (1 for Riemann).
    fn density_modulus(&self) -> u64 {
        1
    }
}

impl StripFunction for XiFunction {
    fn evaluate(&self, p: StripPoint) -> Result<XiEvaluation> {
        self.xi(p)
    }
}

impl LineFunction for XiFunction {
    fn line_value(&self, t: f64) -> Result<LineValue> {
        self.eta_on_line(t)
    }

    fn density_modulus(&self) -> u64 {
        self.conductor()
    }
}
