//! Scanners for the sign law, norm monotonicity in ε and the max/min
//! criterion on the critical line, with their CSV reports.

use std::fmt;
use std::io::{self, Write};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::momentum::{ddeps_momentum_on_line, sign_of, MomentumSample, MomentumSource};
use crate::xi::{LineFunction, LineValue, StripPoint, XiFunction};
use crate::zeros::{find_zeros, mean_gap};

pub const DEFAULT_EXCLUSION_RADIUS: f64 = 0.05;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScanGrid {
    pub t_min: f64,
    pub t_max: f64,
    pub t_steps: usize,
    pub eps_max: f64,
    pub eps_steps: usize,
    pub exclusion_radius: f64,
}

impl ScanGrid {
    pub fn new(t_min: f64, t_max: f64, t_steps: usize, eps_max: f64, eps_steps: usize) -> Result<Self> {
        let grid = Self {
            t_min,
            t_max,
            t_steps,
            eps_max,
            eps_steps,
            exclusion_radius: DEFAULT_EXCLUSION_RADIUS,
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn with_exclusion_radius(mut self, r: f64) -> Result<Self> {
        self.exclusion_radius = r;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Domain(m));
        if self.t_steps < 2 || self.eps_steps < 2 {
            return bad(format!("grid needs at least 2 steps per axis, got {}x{}", self.t_steps, self.eps_steps));
        }
        if !(self.t_min.is_finite() && self.t_max.is_finite() && self.t_max > self.t_min) {
            return bad(format!("bad t range [{}, {}]", self.t_min, self.t_max));
        }
        if !(self.eps_max > 0.0 && self.eps_max < 0.5) {
            return bad(format!("eps_max must be in (0, 1/2), got {}", self.eps_max));
        }
        if !(self.exclusion_radius >= 0.0) {
            return bad(format!("negative exclusion radius {}", self.exclusion_radius));
        }
        Ok(())
    }

    pub fn t_values(&self) -> Vec<f64> {
        linspace(self.t_min, self.t_max, self.t_steps)
    }

    /// Symmetric about 0; the middle node is exactly 0 for odd counts.
    pub fn eps_values(&self) -> Vec<f64> {
        let n = self.eps_steps - 1;
        (0..=n)
            .map(|k| self.eps_max * (2 * k as i64 - n as i64) as f64 / n as f64)
            .collect()
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| if k + 1 == n { b } else { a + (b - a) * k as f64 / (n - 1) as f64 })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanKind {
    SignLaw,
    Monotonicity,
    MaxMin,
}

impl fmt::Display for ScanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScanKind::SignLaw => "sign",
            ScanKind::Monotonicity => "monotone",
            ScanKind::MaxMin => "maxmin",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PointStatus {
    /// Asserted and satisfied.
    Checked,
    /// Asserted and violated beyond the error estimate.
    Violation,
    /// Wrong sign but within the error estimate.
    Indeterminate,
    /// Inside an exclusion disk around a zero; reported only.
    Excluded,
    Error,
}

impl PointStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PointStatus::Checked => "checked",
            PointStatus::Violation => "violation",
            PointStatus::Indeterminate => "indeterminate",
            PointStatus::Excluded => "excluded",
            PointStatus::Error => "error",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub point: StripPoint,
    pub sample: Option<MomentumSample>,
    pub status: PointStatus,
    pub message: Option<String>,
}

impl ScanRow {
    pub fn ok(&self) -> bool {
        !matches!(self.status, PointStatus::Violation | PointStatus::Error)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub point: StripPoint,
    pub quantity: &'static str,
    pub value: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremumKind {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremum {
    pub t: f64,
    pub kind: ExtremumKind,
    pub eta_sign: i8,
    pub eta_log_mag: f64,
    /// `(η(−η″) + η′²) / (η² + η′²)` at the refined critical point.
    pub criterion: f64,
    /// Direct route: maxima positive, minima negative.
    pub direct_ok: bool,
    /// Determinant route: criterion positive.
    pub determinant_ok: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScanSummary {
    pub points: usize,
    pub checked: usize,
    pub excluded: usize,
    pub indeterminate: usize,
    pub errors: usize,
    pub violation_count: usize,
    /// Points where `l_hat` and `∂ε log|ξ|` disagree in sign.
    pub disagreements: usize,
    pub extrema: usize,
    pub route_disagreements: usize,
    pub warnings: usize,
}

#[derive(Clone, Debug)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub function: String,
    pub grid: Option<ScanGrid>,
    pub rows: Vec<ScanRow>,
    pub violations: Vec<Violation>,
    pub extrema: Vec<Extremum>,
    pub warnings: Vec<String>,
    pub summary: ScanSummary,
}

impl ScanReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty() && self.summary.errors == 0 && self.summary.route_disagreements == 0
    }

    /// `key=value` lines for standard output.
    pub fn summary_lines(&self) -> Vec<String> {
        let s = &self.summary;
        let mut out = vec![
            format!("scan={}", self.kind),
            format!("function={}", self.function),
        ];
        if self.kind == ScanKind::MaxMin {
            out.push(format!("extrema={}", s.extrema));
            out.push(format!("route_disagreements={}", s.route_disagreements));
        } else {
            out.push(format!("points={}", s.points));
            out.push(format!("checked={}", s.checked));
            out.push(format!("excluded={}", s.excluded));
            out.push(format!("indeterminate={}", s.indeterminate));
            out.push(format!("disagreements={}", s.disagreements));
        }
        out.push(format!("errors={}", s.errors));
        out.push(format!("warnings={}", s.warnings));
        out.push(format!("violations={}", s.violation_count));
        out
    }

    pub fn write_csv<W: Write + ?Sized>(&self, w: &mut W) -> io::Result<()> {
        match self.kind {
            ScanKind::MaxMin => write_extrema_csv(&self.extrema, w),
            _ => write_rows_csv(&self.rows, w),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is ascii")
    }
}

/// Fixed 12-significant-digit formatting for every CSV number.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.11e}")
    }
}

pub const ROW_COLUMNS: [&str; 9] = [
    "t", "eps", "l_hat", "dlogmag_deps", "fd_step_t", "fd_step_eps", "est_error", "status", "ok",
];
pub const EXTREMA_COLUMNS: [&str; 8] = [
    "t", "kind", "eta_sign", "eta_log_mag", "criterion", "direct_ok", "determinant_ok", "ok",
];

fn write_rows_csv<W: Write + ?Sized>(rows: &[ScanRow], w: &mut W) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(ROW_COLUMNS)?;
    for r in rows {
        let nan = f64::NAN;
        let (l, d, ht, he, e) = r.sample.map_or((nan, nan, nan, nan, nan), |s| {
            (s.l_hat, s.dlogmag_deps, s.fd_step_t, s.fd_step_eps, s.est_error)
        });
        let nums = [r.point.t, r.point.eps, l, d, ht, he, e].map(fmt_num);
        out.write_record(nums.iter().map(String::as_str).chain([r.status.as_str(), bool_str(r.ok())]))?;
    }
    out.flush()
}

fn write_extrema_csv<W: Write + ?Sized>(extrema: &[Extremum], w: &mut W) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(EXTREMA_COLUMNS)?;
    for x in extrema {
        let kind = match x.kind {
            ExtremumKind::Max => "max",
            ExtremumKind::Min => "min",
        };
        out.write_record([
            fmt_num(x.t).as_str(),
            kind,
            &x.eta_sign.to_string(),
            &fmt_num(x.eta_log_mag),
            &fmt_num(x.criterion),
            bool_str(x.direct_ok),
            bool_str(x.determinant_ok),
            bool_str(x.direct_ok && x.determinant_ok),
        ])?;
    }
    out.flush()
}

fn bool_str(b: bool) -> &'static str {
    if b { "true" } else { "false" }
}

/// Critical-line zeros of `f` near the grid, for the exclusion disks.
pub fn exclusion_zeros(f: &XiFunction, grid: &ScanGrid) -> Result<Vec<f64>> {
    let lo = (grid.t_min - 1.0).max(0.0);
    let hi = grid.t_max + 1.0;
    let mut zeros: Vec<f64> = find_zeros(lo, hi, f, 0.01, None)?
        .zeros
        .iter()
        .map(|z| z.ordinate)
        .collect();
    // zeros below the axis matter when the grid reaches t < 0
    if grid.t_min < 0.0 {
        let dual = f.dual()?;
        let below = find_zeros(0.0, -grid.t_min + 1.0, &dual, 0.01, None)?;
        zeros.extend(below.zeros.iter().map(|z| -z.ordinate));
        zeros.sort_by(f64::total_cmp);
    }
    Ok(zeros)
}

fn excluded(p: StripPoint, zeros: &[f64], radius: f64) -> bool {
    let i = zeros.partition_point(|&g| g < p.t);
    let near = |g: f64| (p.t - g).hypot(p.eps) < radius;
    zeros.get(i).is_some_and(|&g| near(g)) || i.checked_sub(1).is_some_and(|j| near(zeros[j]))
}

/// Evaluates one t-line of the grid, off-axis nodes only.
fn scan_line<S: MomentumSource + ?Sized>(
    t: f64,
    eps_values: &[f64],
    source: &S,
    zeros: &[f64],
    radius: f64,
) -> Vec<ScanRow> {
    eps_values
        .iter()
        .filter(|e| **e != 0.0)
        .map(|&eps| {
            let point = StripPoint::new(t, eps);
            let ex = excluded(point, zeros, radius);
            match source.sample(point) {
                Ok(s) => ScanRow {
                    point,
                    sample: Some(s),
                    status: if ex { PointStatus::Excluded } else { PointStatus::Checked },
                    message: None,
                },
                // the law is not claimed at a zero itself, where L-hat is undefined
                Err(e @ Error::AtZero { .. }) => ScanRow {
                    point,
                    sample: None,
                    status: PointStatus::Excluded,
                    message: Some(e.to_string()),
                },
                Err(e) => ScanRow {
                    point,
                    sample: None,
                    status: if ex { PointStatus::Excluded } else { PointStatus::Error },
                    message: Some(e.to_string()),
                },
            }
        })
        .collect()
}

/// Classifies a checked row by the sign of `value` against `sign(ε)`.
fn classify(row: &mut ScanRow, value: f64, error: f64) -> bool {
    if row.status != PointStatus::Checked {
        return false;
    }
    if sign_of(value) == sign_of(row.point.eps) {
        return false;
    }
    if value.abs() > error {
        row.status = PointStatus::Violation;
        true
    } else {
        row.status = PointStatus::Indeterminate;
        false
    }
}

fn sample_grid<S: MomentumSource + ?Sized>(
    grid: &ScanGrid,
    source: &S,
    zeros: &[f64],
) -> Result<Vec<Vec<ScanRow>>> {
    grid.validate()?;
    let eps = grid.eps_values();
    let mut zeros = zeros.to_vec();
    zeros.sort_by(f64::total_cmp);
    Ok(grid
        .t_values()
        .par_iter()
        .map(|&t| scan_line(t, &eps, source, &zeros, grid.exclusion_radius))
        .collect())
}

fn finish(kind: ScanKind, function: String, grid: ScanGrid, lines: Vec<Vec<ScanRow>>, quantity: &'static str) -> ScanReport {
    let rows: Vec<ScanRow> = lines.into_iter().flatten().collect();
    let mut summary = ScanSummary {
        points: rows.len(),
        ..ScanSummary::default()
    };
    let mut violations = Vec::new();
    for r in &rows {
        match r.status {
            PointStatus::Checked => summary.checked += 1,
            PointStatus::Excluded => summary.excluded += 1,
            PointStatus::Indeterminate => summary.indeterminate += 1,
            PointStatus::Error => summary.errors += 1,
            PointStatus::Violation => {
                let s = r.sample.expect("violations carry a sample");
                let value = if quantity == "l_hat" { s.l_hat } else { s.dlogmag_deps };
                violations.push(Violation {
                    point: r.point,
                    quantity,
                    value,
                });
            }
        }
        if let Some(s) = r.sample {
            let err = s.est_error;
            if sign_of(s.l_hat) != sign_of(s.dlogmag_deps) && s.l_hat.abs().max(s.dlogmag_deps.abs()) > err {
                summary.disagreements += 1;
            }
        }
    }
    summary.violation_count = violations.len();
    ScanReport {
        kind,
        function,
        grid: Some(grid),
        rows,
        violations,
        extrema: Vec::new(),
        warnings: Vec::new(),
        summary,
    }
}

/// Asserts `sign(L̂) = sign(ε)` at every off-axis node outside the exclusion
/// disks around `zeros` (ordinates of critical-line zeros).
pub fn scan_sign_law<S: MomentumSource + ?Sized>(grid: &ScanGrid, source: &S, zeros: &[f64]) -> Result<ScanReport> {
    let mut lines = sample_grid(grid, source, zeros)?;
    for row in lines.iter_mut().flatten() {
        if let Some(s) = row.sample {
            classify(row, s.l_hat, s.est_error);
        }
    }
    Ok(finish(ScanKind::SignLaw, source.label(), *grid, lines, "l_hat"))
}

/// Asserts `∂ε log|ξ|` has the sign of `ε` and that `log|ξ|` increases
/// outward along every ε ray of the grid.
pub fn scan_monotonicity<S: MomentumSource + ?Sized>(grid: &ScanGrid, source: &S, zeros: &[f64]) -> Result<ScanReport> {
    let mut lines = sample_grid(grid, source, zeros)?;
    let mut ray_failures = Vec::new();
    for line in &mut lines {
        for row in line.iter_mut() {
            if let Some(s) = row.sample {
                classify(row, s.dlogmag_deps, s.est_error);
            }
        }
        // outward neighbours on each side of ε = 0
        for pair in line.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            let (Some(sa), Some(sb)) = (a.sample, b.sample) else {
                continue;
            };
            if sign_of(a.point.eps) != sign_of(b.point.eps) {
                continue;
            }
            let (inner, outer) = if a.point.eps.abs() < b.point.eps.abs() { (sa, sb) } else { (sb, sa) };
            if outer.log_mag <= inner.log_mag {
                ray_failures.push(outer.point);
            }
        }
    }
    let mut report = finish(ScanKind::Monotonicity, source.label(), *grid, lines, "dlogmag_deps");
    for p in ray_failures {
        report.warnings.push(format!("log|xi| not increasing outward at {p}"));
    }
    report.summary.warnings = report.warnings.len();
    Ok(report)
}

/// Scan step for the max/min criterion: `min(0.02 × mean gap, 0.05)`.
pub fn maxmin_step(t_max: f64, modulus: u64) -> f64 {
    (0.02 * mean_gap(t_max.max(1.0), modulus)).min(0.05)
}

/// Locates every local extremum of the real function `η(t)` on
/// `[t_min, t_max]` and checks maxima are positive and minima negative, both
/// directly and through the sign of `η(−η″) + η′²`.
pub fn scan_maxmin_criterion<F: LineFunction + ?Sized>(
    t_min: f64,
    t_max: f64,
    f: &F,
    label: String,
) -> Result<ScanReport> {
    if !(t_min >= 0.0 && t_max > t_min && t_max.is_finite()) {
        return Err(Error::Domain(format!("bad range [{t_min}, {t_max}]")));
    }
    let step = maxmin_step(t_max, f.density_modulus());
    let n = ((t_max - t_min) / step).ceil() as usize;
    let grid = linspace(t_min, t_max, n + 1);
    let values: Vec<LineValue> = grid
        .par_iter()
        .map(|&t| f.line_value(t))
        .collect::<Result<_>>()?;

    let mut candidates = Vec::new();
    for (k, w) in values.windows(3).enumerate() {
        let scale = w[1].log_mag;
        let [a, b, c] = [w[0].scaled(scale), w[1].scaled(scale), w[2].scaled(scale)];
        let kind = if b > a && b > c {
            ExtremumKind::Max
        } else if b < a && b < c {
            ExtremumKind::Min
        } else {
            continue;
        };
        // vertex of the parabola through the three nodes
        let denom = a - 2.0 * b + c;
        let shift = if denom != 0.0 { 0.5 * (a - c) / denom } else { 0.0 };
        candidates.push((k + 1, kind, grid[k + 1] + shift.clamp(-1.0, 1.0) * step));
    }

    let mut warnings = Vec::new();
    for pair in candidates.windows(2) {
        if pair[1].0 - pair[0].0 <= 1 {
            warnings.push(format!(
                "unresolved extrema near t={} (derivative changes sign twice within one step)",
                grid[pair[0].0]
            ));
        }
    }

    let extrema: Vec<Extremum> = candidates
        .par_iter()
        .map(|&(_, kind, t0)| refine_extremum(f, kind, t0, step))
        .collect::<Result<_>>()?;

    let mut violations = Vec::new();
    let mut route_disagreements = 0;
    for x in &extrema {
        if x.direct_ok != x.determinant_ok {
            route_disagreements += 1;
        }
        if !x.direct_ok {
            violations.push(Violation {
                point: StripPoint::on_line(x.t),
                quantity: "eta",
                value: f64::from(x.eta_sign),
            });
        } else if !x.determinant_ok {
            violations.push(Violation {
                point: StripPoint::on_line(x.t),
                quantity: "ddeps_momentum",
                value: x.criterion,
            });
        }
    }
    let summary = ScanSummary {
        extrema: extrema.len(),
        route_disagreements,
        violation_count: violations.len(),
        warnings: warnings.len(),
        ..ScanSummary::default()
    };
    Ok(ScanReport {
        kind: ScanKind::MaxMin,
        function: label,
        grid: None,
        rows: Vec::new(),
        violations,
        extrema,
        warnings,
        summary,
    })
}

/// Newton steps on `η′` from the parabolic estimate, then both criterion
/// routes at the refined point.
fn refine_extremum<F: LineFunction + ?Sized>(f: &F, kind: ExtremumKind, t0: f64, step: f64) -> Result<Extremum> {
    let mut t = t0;
    let mut d = ddeps_momentum_on_line(t, f)?;
    for _ in 0..4 {
        if d.d2 == 0.0 {
            break;
        }
        let dt = (-d.d1 / d.d2).clamp(-step, step);
        t += dt;
        d = ddeps_momentum_on_line(t, f)?;
        if dt.abs() < 1e-10 {
            break;
        }
    }
    let v = f.line_value(t)?;
    let direct_ok = match kind {
        ExtremumKind::Max => v.sign > 0,
        ExtremumKind::Min => v.sign < 0,
    };
    Ok(Extremum {
        t,
        kind,
        eta_sign: v.sign,
        eta_log_mag: v.log_mag,
        criterion: d.value,
        direct_ok,
        determinant_ok: d.value > 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::DirichletCharacter;
    use crate::momentum::{ZeroSumConfig, ZeroSumModel};
    use crate::zeros::{ZeroRecord, ZeroSource};
    use num_complex::Complex64;

    #[test]
    fn grid_nodes() {
        let g = ScanGrid::new(5.0, 60.0, 200, 0.45, 19).unwrap();
        let e = g.eps_values();
        assert_eq!(e.len(), 19);
        assert_eq!(e[9], 0.0);
        assert!((e[10] - 0.05).abs() < 1e-15);
        assert!(e.iter().zip(e.iter().rev()).all(|(a, b)| a == &-b));
        let t = g.t_values();
        assert_eq!((t[0], t[199]), (5.0, 60.0));
        assert!(ScanGrid::new(5.0, 60.0, 1, 0.45, 19).is_err());
        assert!(ScanGrid::new(5.0, 60.0, 2, 0.5, 19).is_err());
    }

    #[test]
    fn exclusion_disk() {
        let zeros = [14.134_725, 21.022_04];
        assert!(excluded(StripPoint::new(14.15, 0.01), &zeros, 0.05));
        assert!(!excluded(StripPoint::new(14.15, 0.05), &zeros, 0.05));
        assert!(!excluded(StripPoint::new(18.0, 0.01), &zeros, 0.05));
    }

    #[test]
    fn riemann_small_sign_scan() {
        let f = XiFunction::Riemann;
        let g = ScanGrid::new(10.0, 30.0, 21, 0.45, 7).unwrap();
        let zeros = exclusion_zeros(&f, &g).unwrap();
        assert_eq!(zeros.len(), 4);
        let r = scan_sign_law(&g, &f, &zeros).unwrap();
        assert_eq!(r.summary.points, 21 * 6);
        assert!(r.is_clean(), "{:?}", r.summary_lines());
        assert_eq!(r.summary.disagreements, 0);
        let m = scan_monotonicity(&g, &f, &zeros).unwrap();
        assert!(m.is_clean() && m.warnings.is_empty());
    }

    #[test]
    fn synthetic_off_line_zero_is_caught() {
        let records = [14.134_725, 21.022_04, 25.010_858, 30.424_876, 32.935_062]
            .iter()
            .map(|&g| ZeroRecord {
                ordinate: g,
                source: ZeroSource::Ingested,
                tolerance: 1e-6,
                character: None,
            })
            .collect();
        let cfg = ZeroSumConfig::new(records, true)
            .with_injected([Complex64::new(0.6, 20.0), Complex64::new(0.4, 20.0)]);
        let model = ZeroSumModel::new(cfg);
        let g = ScanGrid::new(18.0, 22.0, 41, 0.45, 19).unwrap();
        let r = scan_sign_law(&g, &model, &[]).unwrap();
        assert!(r.summary.violation_count > 0);
        assert!(r
            .violations
            .iter()
            .any(|v| v.point.eps > 0.0 && v.point.eps < 0.1 && (v.point.t - 20.0).abs() < 1.0));
        let m = scan_monotonicity(&g, &model, &[]).unwrap();
        let pts = |r: &ScanReport| r.violations.iter().map(|v| v.point).collect::<Vec<_>>();
        assert_eq!(pts(&r), pts(&m));
    }

    #[test]
    fn maxmin_riemann_and_mod_four() {
        let r = scan_maxmin_criterion(10.0, 40.0, &XiFunction::Riemann, "riemann".into()).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations);
        assert!(r.warnings.is_empty());
        // one extremum between each pair of the six zeros in (10, 40), one past the last
        assert_eq!(r.extrema.len(), 6);
        for x in &r.extrema {
            assert_eq!(x.direct_ok, x.determinant_ok);
        }
        let chi = DirichletCharacter::new(4, 1).unwrap();
        let f = XiFunction::dirichlet(chi).unwrap();
        let r = scan_maxmin_criterion(0.0, 20.0, &f, f.label()).unwrap();
        assert!(r.is_clean(), "{:?}", r.violations);
    }

    #[test]
    fn csv_is_fixed_format() {
        assert_eq!(fmt_num(0.1), "1.00000000000e-1");
        assert_eq!(fmt_num(-12345.678), "-1.23456780000e4");
        let f = XiFunction::Riemann;
        let g = ScanGrid::new(20.0, 21.0, 2, 0.4, 3).unwrap();
        let r = scan_sign_law(&g, &f, &[]).unwrap();
        let csv = r.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(ROW_COLUMNS.join(",").as_str()));
        assert_eq!(csv.lines().count(), 1 + 4);
        assert!(csv.lines().skip(1).all(|l| l.ends_with(",checked,true")));
    }
}
