//! Angular momentum of ξ and its normalised form.
//!
//! `𝓛 = det[[Re ξ, Im ξ], [∂t Re ξ, ∂t Im ξ]] = |ξ|² ∂t arg ξ`. Everything here
//! works with `L̂ = 𝓛 / |ξ|²`, which stays representable where `|ξ|²` does not.
//! By Cauchy–Riemann `L̂ = ∂ε log |ξ|`, and through the Hadamard product
//! `L̂ = Σ_ρ (1/2 + ε - Re ρ) / |ρ - s|²`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::specfun::wrap_phase;
use crate::xi::{LineFunction, StripFunction, StripPoint, XiFunction};
use crate::zeros::ZeroRecord;

/// Base finite-difference step; `h_t` is scaled by `sqrt(max(1, |t|))`.
pub const BASE_STEP: f64 = 1e-4;

/// Points whose series error exceeds this fraction of `|ξ|` count as zeros.
const NEAR_ZERO_REL: f64 = 0.1;

const MAX_STEP_HALVINGS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumSample {
    pub point: StripPoint,
    /// `∂t arg ξ`.
    pub l_hat: f64,
    /// `∂ε log |ξ|`.
    pub dlogmag_deps: f64,
    pub fd_step_t: f64,
    pub fd_step_eps: f64,
    /// Richardson level difference plus rounding, summed over both derivatives.
    pub est_error: f64,
    pub log_mag: f64,
}

impl MomentumSample {
    /// Sign of `𝓛` itself (equal to the sign of `l_hat` since `|ξ|² > 0`).
    pub fn momentum_sign(&self) -> i8 {
        sign_of(self.l_hat)
    }

    /// `ln |𝓛|`.
    pub fn log_abs_momentum(&self) -> f64 {
        2.0 * self.log_mag + self.l_hat.abs().ln()
    }
}

pub(crate) fn sign_of(x: f64) -> i8 {
    if x > 0.0 {
        1
    } else if x < 0.0 {
        -1
    } else {
        0
    }
}

struct Derivative {
    value: f64,
    error: f64,
}

/// Central differences at `h` and `h/2`, combined by Richardson extrapolation.
fn richardson<G>(h: f64, mut diff: G) -> Result<Derivative>
where
    G: FnMut(f64) -> Result<(f64, f64)>,
{
    let (d1, noise1) = diff(h)?;
    let (d2, noise2) = diff(h / 2.0)?;
    Ok(Derivative {
        value: (4.0 * d2 - d1) / 3.0,
        error: (d1 - d2).abs() + noise1.max(noise2),
    })
}

/// `L̂` and `∂ε log|ξ|` at `p` by finite differences.
pub fn momentum_sample<F: StripFunction + ?Sized>(f: &F, p: StripPoint) -> Result<MomentumSample> {
    let at_zero = || Error::AtZero { t: p.t, eps: p.eps };
    let center = f.evaluate(p)?;
    if center.value.is_zero || center.series_error.estimated_rel_error > NEAR_ZERO_REL {
        return Err(at_zero());
    }
    let eval = |q: StripPoint| -> Result<(f64, f64, f64)> {
        let e = f.evaluate(q)?;
        if e.value.is_zero || e.series_error.estimated_rel_error > NEAR_ZERO_REL {
            return Err(Error::AtZero { t: p.t, eps: p.eps });
        }
        Ok((e.value.phase, e.value.log_mag, e.log_uncertainty()))
    };

    let mut h_t = BASE_STEP * p.t.abs().max(1.0).sqrt();
    let mut halvings = 0;
    let d_t = loop {
        let mut jumped = false;
        let d = richardson(h_t, |h| {
            let (a, _, ua) = eval(StripPoint::new(p.t + h, p.eps))?;
            let (b, _, ub) = eval(StripPoint::new(p.t - h, p.eps))?;
            let delta = wrap_phase(a - b);
            if delta.abs() > PI / 2.0 {
                jumped = true;
            }
            Ok((delta / (2.0 * h), 2.0 * (ua + ub) / h))
        })?;
        if !jumped {
            break d;
        }
        halvings += 1;
        if halvings > MAX_STEP_HALVINGS {
            return Err(at_zero());
        }
        h_t /= 2.0;
    };

    let h_e = BASE_STEP;
    let d_e = richardson(h_e, |h| {
        let (_, a, ua) = eval(StripPoint::new(p.t, p.eps + h))?;
        let (_, b, ub) = eval(StripPoint::new(p.t, p.eps - h))?;
        Ok(((a - b) / (2.0 * h), 2.0 * (ua + ub) / h))
    })?;

    Ok(MomentumSample {
        point: p,
        l_hat: d_t.value,
        dlogmag_deps: d_e.value,
        fd_step_t: h_t,
        fd_step_eps: h_e,
        est_error: d_t.error + d_e.error,
        log_mag: center.value.log_mag,
    })
}

/// `𝓛 / |ξ(p)|²` computed straight from the determinant of real and imaginary
/// parts (values rescaled by `|ξ(p)|` first).
pub fn determinant_lhat<F: StripFunction + ?Sized>(f: &F, p: StripPoint) -> Result<f64> {
    let center = f.evaluate(p)?;
    if center.value.is_zero {
        return Err(Error::AtZero { t: p.t, eps: p.eps });
    }
    let scale = center.value.log_mag;
    let h = BASE_STEP * p.t.abs().max(1.0).sqrt();
    let v = |dt: f64| -> Result<Complex64> {
        Ok(f.evaluate(StripPoint::new(p.t + dt, p.eps))?.value.scaled(scale))
    };
    let v0 = center.value.scaled(scale);
    let d1 = (v(h)? - v(-h)?) / (2.0 * h);
    let d2 = (v(h / 2.0)? - v(-h / 2.0)?) / h;
    let dv = (4.0 * d2 - d1) / 3.0;
    Ok(v0.re * dv.im - v0.im * dv.re)
}

/// Sources of momentum samples the scanners can consume.
pub trait MomentumSource: Sync {
    fn sample(&self, p: StripPoint) -> Result<MomentumSample>;

    fn label(&self) -> String;
}

impl MomentumSource for XiFunction {
    fn sample(&self, p: StripPoint) -> Result<MomentumSample> {
        momentum_sample(self, p)
    }

    fn label(&self) -> String {
        XiFunction::label(self)
    }
}

/// Keeps the phase continuous along a scan line by adding multiples of 2π.
#[derive(Clone, Debug, Default)]
pub struct PhaseTracker {
    last_raw: Option<f64>,
    unwrapped: f64,
}

impl PhaseTracker {
    pub fn new() -> Self {
        Self::default()
    }

    /// Feed the next reduced phase; returns the unwrapped one.
    pub fn push(&mut self, phase: f64) -> f64 {
        match self.last_raw {
            None => self.unwrapped = phase,
            Some(prev) => self.unwrapped += wrap_phase(phase - prev),
        }
        self.last_raw = Some(phase);
        self.unwrapped
    }

    /// Increment the next phase would produce, without consuming it.
    pub fn peek_increment(&self, phase: f64) -> f64 {
        self.last_raw.map_or(0.0, |prev| wrap_phase(phase - prev))
    }
}

/// Unwrapped phase of `f` along `t ∈ [t_start, t_end]` at fixed `eps`.
///
/// Increments above π/2 are refined by halving the local step down to
/// `step / 64`; a jump that survives that (a zero on the scan line) is kept.
pub fn phase_scan<F: StripFunction + ?Sized>(
    f: &F,
    eps: f64,
    t_start: f64,
    t_end: f64,
    step: f64,
) -> Result<Vec<(f64, f64)>> {
    if !(step > 0.0) || t_end < t_start {
        return Err(Error::Domain(format!("bad phase scan [{t_start}, {t_end}] step {step}")));
    }
    let min_step = step / 64.0;
    let mut tracker = PhaseTracker::new();
    let mut out = Vec::new();
    let mut t = t_start;
    let first = f.evaluate(StripPoint::new(t, eps))?;
    out.push((t, tracker.push(first.value.phase)));
    while t < t_end {
        let mut h = step.min(t_end - t);
        loop {
            let e = f.evaluate(StripPoint::new(t + h, eps))?;
            if tracker.peek_increment(e.value.phase).abs() <= PI / 2.0 || h <= min_step {
                t += h;
                out.push((t, tracker.push(e.value.phase)));
                break;
            }
            h /= 2.0;
        }
    }
    Ok(out)
}

/// Zero set for the truncated Hadamard-sum representation of `L̂`.
#[derive(Clone, Debug)]
pub struct ZeroSumConfig {
    /// Critical-line zeros, ascending.
    pub zeros: Vec<ZeroRecord>,
    /// Explicit zeros anywhere in the strip (e.g. synthetic off-line ones).
    pub injected: Vec<Complex64>,
    /// Also use the conjugate ordinate `-γ` of every zero.
    pub symmetrization: bool,
    /// Modulus in the density `log(q u / 2π) / 2π` used for the tail.
    pub modulus: u64,
}

impl ZeroSumConfig {
    pub fn new(mut zeros: Vec<ZeroRecord>, symmetrization: bool) -> Self {
        zeros.sort_by(|a, b| a.ordinate.total_cmp(&b.ordinate));
        Self {
            zeros,
            injected: Vec::new(),
            symmetrization,
            modulus: 1,
        }
    }

    pub fn with_injected(mut self, zeros: impl IntoIterator<Item = Complex64>) -> Self {
        self.injected.extend(zeros);
        self
    }

    pub fn with_modulus(mut self, modulus: u64) -> Self {
        self.modulus = modulus;
        self
    }

    pub fn height(&self) -> f64 {
        self.zeros.last().map_or(0.0, |z| z.ordinate)
    }

    /// Every zero `ρ` the sum runs over, mirrors included.
    fn all_zeros(&self) -> impl Iterator<Item = Complex64> + '_ {
        let line = self.zeros.iter().map(|z| Complex64::new(0.5, z.ordinate));
        let explicit = line.chain(self.injected.iter().copied());
        let sym = self.symmetrization;
        explicit.flat_map(move |rho| {
            let mirror = sym.then_some(rho.conj());
            std::iter::once(rho).chain(mirror)
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroSum {
    pub value: f64,
    /// Bound on the contribution of ordinates above the last listed zero.
    pub tail_bound: f64,
}

/// `L̂(p) ≈ Σ_ρ (1/2 + ε - Re ρ) / |ρ - s|²`.
pub fn zero_sum_lhat(p: StripPoint, cfg: &ZeroSumConfig) -> Result<ZeroSum> {
    if cfg.zeros.is_empty() && cfg.injected.is_empty() {
        return Err(Error::EmptyZeroList);
    }
    let s = p.s();
    let value = cfg
        .all_zeros()
        .map(|rho| {
            let d = s - rho;
            d.re / d.norm_sqr()
        })
        .sum();
    Ok(ZeroSum {
        value,
        tail_bound: tail_bound(p, cfg),
    })
}

/// `Σ_ρ ln |s - ρ|`, the log-modulus of the truncated product.
pub fn zero_product_log_mag(p: StripPoint, cfg: &ZeroSumConfig) -> f64 {
    let s = p.s();
    cfg.all_zeros().map(|rho| (s - rho).norm().ln()).sum()
}

/// `(|ε| + 1/2) ∫_T^∞ dN(u) [1/(u-t)² + 1/(u+t)²]` with
/// `dN = log(q u / 2π) / 2π du`; infinite when `|t| >= T`. The mirrored
/// term only enters with symmetrization on.
pub fn tail_bound(p: StripPoint, cfg: &ZeroSumConfig) -> f64 {
    let q = cfg.modulus.max(1) as f64;
    let height = cfg.height().max(2.0 * PI / q);
    let mut integral = density_tail(height, p.t, q);
    if cfg.symmetrization {
        integral += density_tail(height, -p.t, q);
    }
    (p.eps.abs() + 0.5) * integral
}

/// `∫_T^∞ ln(c u) / (2π (u - a)²) du`, `c = q/2π`.
fn density_tail(height: f64, a: f64, q: f64) -> f64 {
    if a >= height {
        return f64::INFINITY;
    }
    let c = q / (2.0 * PI);
    let head = (c * height).ln() / (height - a);
    // (1/a) ln(T / (T - a)), continuous at a = 0
    let x = a / height;
    let tail = if x.abs() < 1e-8 {
        (1.0 + x / 2.0) / height
    } else {
        -(-x).ln_1p() / a
    };
    (head + tail) / (2.0 * PI)
}

/// Synthetic "ξ" defined only through its zeros; its `L̂` is the zero sum
/// exactly, which makes it a model for exercising the scanners.
#[derive(Clone, Debug)]
pub struct ZeroSumModel {
    pub config: ZeroSumConfig,
}

impl ZeroSumModel {
    pub fn new(config: ZeroSumConfig) -> Self {
        Self { config }
    }
}

impl MomentumSource for ZeroSumModel {
    fn sample(&self, p: StripPoint) -> Result<MomentumSample> {
        let sum = zero_sum_lhat(p, &self.config)?;
        if !sum.value.is_finite() {
            return Err(Error::AtZero { t: p.t, eps: p.eps });
        }
        Ok(MomentumSample {
            point: p,
            l_hat: sum.value,
            dlogmag_deps: sum.value,
            fd_step_t: 0.0,
            fd_step_eps: 0.0,
            est_error: sum.tail_bound,
            log_mag: zero_product_log_mag(p, &self.config),
        })
    }

    fn label(&self) -> String {
        "zero-sum-model".into()
    }
}

/// `[∂𝓛[η]/∂ε]_{ε=0} = η (-η'') + (η')²` on the critical line, together with
/// the pieces, all divided by `η² + η'²` (the signs are what matter).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LineMomentumDerivative {
    pub t: f64,
    /// `(η (-η'') + η'²) / (η² + η'²)`.
    pub value: f64,
    /// `η`, `η'`, `η''` divided by `sqrt(η² + η'²)`.
    pub eta: f64,
    pub d1: f64,
    pub d2: f64,
}

/// See [`LineMomentumDerivative`]. Derivatives by central differences of the
/// real function `η(t)` with Richardson extrapolation.
pub fn ddeps_momentum_on_line<F: LineFunction + ?Sized>(
    t: f64,
    f: &F,
) -> Result<LineMomentumDerivative> {
    let h = 1e-3 * t.abs().max(1.0).sqrt();
    let offsets = [-h, -h / 2.0, 0.0, h / 2.0, h];
    let mut vals = Vec::with_capacity(5);
    for dt in offsets {
        vals.push(f.line_value(t + dt)?);
    }
    let scale = vals
        .iter()
        .filter(|v| v.sign != 0)
        .map(|v| v.log_mag)
        .fold(f64::NEG_INFINITY, f64::max);
    if !scale.is_finite() {
        return Err(Error::AtZero { t, eps: 0.0 });
    }
    let v: Vec<f64> = vals.iter().map(|x| x.scaled(scale)).collect();
    let (m2, m1, c, p1, p2) = (v[0], v[1], v[2], v[3], v[4]);
    let d1_h = (p2 - m2) / (2.0 * h);
    let d1_half = (p1 - m1) / h;
    let d1 = (4.0 * d1_half - d1_h) / 3.0;
    let d2_h = (p2 - 2.0 * c + m2) / (h * h);
    let d2_half = (p1 - 2.0 * c + m1) / (h * h / 4.0);
    let d2 = (4.0 * d2_half - d2_h) / 3.0;
    let norm = c * c + d1 * d1;
    let r = norm.sqrt();
    Ok(LineMomentumDerivative {
        t,
        value: (c * -d2 + d1 * d1) / norm,
        eta: c / r,
        d1: d1 / r,
        d2: d2 / r,
    })
}
