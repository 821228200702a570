//! Critical-line zeros: sign-change search on `η(t)`, refinement, and the
//! plain-text zero table format.
//!
//! Table format: UTF-8, LF or CRLF, one decimal ordinate per line, `#` lines are
//! comments, `# key=value` comments set `precision`, `modulus` and `index`.

use std::f64::consts::PI;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::xi::{LineFunction, LineValue};

pub const MAX_SCAN_STEP: f64 = 0.05;
pub const BRACKET_TOLERANCE: f64 = 1e-9;
pub const DEFAULT_TABLE_PRECISION: f64 = 1e-8;
/// Environment variable naming a default Riemann zero table.
pub const ZERO_TABLE_ENV: &str = "XI_ZERO_TABLE";

/// Depth (relative to the neighbouring grid values) below which a local
/// `|η|` minimum without a sign change is reported as a suspect.
const SUSPECT_DEPTH: f64 = 1e-2;

static BUNDLED_RIEMANN: &str = include_str!("../data/riemann_zeros_10k.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ZeroSource {
    Computed,
    Ingested,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ZeroRecord {
    /// `t > 0` of the zero `1/2 + it`.
    pub ordinate: f64,
    pub source: ZeroSource,
    pub tolerance: f64,
    /// `(modulus, index)`; `None` for ζ.
    pub character: Option<(u64, usize)>,
}

/// A local minimum of `|η|` that might hide a double zero or a close pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Suspect {
    pub t: f64,
    /// `|η(t)|` over the larger of the two neighbouring grid values.
    pub depth: f64,
}

#[derive(Clone, Debug, Default)]
pub struct ZeroScan {
    pub zeros: Vec<ZeroRecord>,
    pub suspects: Vec<Suspect>,
    pub warnings: Vec<String>,
}

/// Mean spacing of zeros at height `t`: `2π / ln(q t / 2π)`.
pub fn mean_gap(t: f64, modulus: u64) -> f64 {
    let x = modulus.max(1) as f64 * t / (2.0 * PI);
    if x <= std::f64::consts::E {
        2.0 * PI
    } else {
        2.0 * PI / x.ln()
    }
}

/// All sign changes of `η` on `[t_min, t_max]`, refined by bisection.
pub fn find_zeros<F: LineFunction + ?Sized>(
    t_min: f64,
    t_max: f64,
    f: &F,
    step: f64,
    character: Option<(u64, usize)>,
) -> Result<ZeroScan> {
    if !(t_min >= 0.0) || !(t_max >= t_min) || !t_max.is_finite() {
        return Err(Error::Domain(format!("bad zero range [{t_min}, {t_max}]")));
    }
    if !(step > 0.0 && step <= MAX_SCAN_STEP) {
        return Err(Error::Domain(format!("scan step {step} outside (0, {MAX_SCAN_STEP}]")));
    }
    let mut scan = ZeroScan::default();
    let gap = mean_gap(t_max, f.density_modulus());
    if 2.0 * step > gap {
        scan.warnings.push(format!(
            "step {step} is coarse: mean zero gap near t={t_max} is {gap:.4}"
        ));
    }

    let n = ((t_max - t_min) / step).ceil().max(1.0) as usize;
    let grid: Vec<f64> = (0..=n)
        .map(|k| if k == n { t_max } else { t_min + k as f64 * step })
        .collect();
    let values: Vec<LineValue> = grid
        .par_iter()
        .map(|&t| f.line_value(t))
        .collect::<Result<_>>()?;

    let mut brackets = Vec::new();
    for (k, v) in values.iter().enumerate() {
        if v.sign == 0 && v.t > 0.0 {
            brackets.push((v.t, v.t));
        }
        if let Some(w) = values.get(k + 1) {
            if v.sign * w.sign < 0 {
                brackets.push((v.t, w.t));
            }
        }
    }
    let refined: Vec<f64> = brackets
        .par_iter()
        .map(|&(a, b)| refine(f, a, b))
        .collect::<Result<_>>()?;
    scan.zeros = refined
        .into_iter()
        .filter(|&t| t > 0.0)
        .map(|ordinate| ZeroRecord {
            ordinate,
            source: ZeroSource::Computed,
            tolerance: BRACKET_TOLERANCE,
            character,
        })
        .collect();
    for w in scan.zeros.windows(2) {
        if w[1].ordinate - w[0].ordinate < 2.0 * step {
            scan.warnings.push(format!(
                "zeros at {:.9} and {:.9} are closer than twice the step {step}",
                w[0].ordinate, w[1].ordinate
            ));
        }
    }

    for w in values.windows(3) {
        let [a, b, c] = [&w[0], &w[1], &w[2]];
        if b.sign == 0 || a.sign != b.sign || b.sign != c.sign {
            continue;
        }
        if b.log_mag < a.log_mag && b.log_mag < c.log_mag {
            let depth = (b.log_mag - a.log_mag.max(c.log_mag)).exp();
            if depth < SUSPECT_DEPTH {
                scan.suspects.push(Suspect { t: b.t, depth });
            }
        }
    }
    Ok(scan)
}

/// Bisection on the sign of `η` until the bracket is below
/// [`BRACKET_TOLERANCE`]; returns the midpoint.
pub fn refine<F: LineFunction + ?Sized>(f: &F, mut a: f64, mut b: f64) -> Result<f64> {
    let sign_a = f.line_value(a)?.sign;
    while b - a > BRACKET_TOLERANCE {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let s = f.line_value(m)?.sign;
        if s == 0 {
            return Ok(m);
        }
        if s == sign_a {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

/// A parsed zero table with its header values.
#[derive(Clone, Debug, Default)]
pub struct ZeroTable {
    pub records: Vec<ZeroRecord>,
    pub precision: f64,
    pub character: Option<(u64, usize)>,
    pub warnings: Vec<String>,
}

/// Parses the table format; `origin` names the source in error messages.
pub fn parse_zero_table(text: &str, origin: &str) -> Result<ZeroTable> {
    let parse_err = |line: usize, message: String| Error::Parse {
        path: origin.to_string(),
        line,
        message,
    };
    let mut precision = DEFAULT_TABLE_PRECISION;
    let mut modulus = None;
    let mut index = None;
    let mut ordinates: Vec<(usize, f64)> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let Some((key, value)) = comment.trim().split_once('=') else {
                continue;
            };
            let value = value.trim();
            let bad = |what: &str| parse_err(line_no, format!("bad {what} value {value:?}"));
            match key.trim() {
                "precision" => {
                    precision = value.parse::<f64>().map_err(|_| bad("precision"))?;
                    if !(precision > 0.0) {
                        return Err(bad("precision"));
                    }
                }
                "modulus" => modulus = Some(value.parse::<u64>().map_err(|_| bad("modulus"))?),
                "index" => index = Some(value.parse::<usize>().map_err(|_| bad("index"))?),
                _ => {}
            }
            continue;
        }
        let t: f64 = line
            .parse()
            .map_err(|_| parse_err(line_no, format!("not a decimal ordinate: {line:?}")))?;
        if !(t > 0.0) || !t.is_finite() {
            return Err(parse_err(line_no, format!("ordinate must be positive: {line:?}")));
        }
        ordinates.push((line_no, t));
    }
    let character = match (modulus, index) {
        (Some(q), i) if q > 1 => Some((q, i.unwrap_or(1))),
        _ => None,
    };
    let mut warnings = Vec::new();
    for w in ordinates.windows(2) {
        if w[1].1 <= w[0].1 {
            warnings.push(format!(
                "{origin}: line {}: ordinate {} not above previous {}",
                w[1].0, w[1].1, w[0].1
            ));
        }
    }
    let records = ordinates
        .into_iter()
        .map(|(_, ordinate)| ZeroRecord {
            ordinate,
            source: ZeroSource::Ingested,
            tolerance: precision,
            character,
        })
        .collect();
    Ok(ZeroTable {
        records,
        precision,
        character,
        warnings,
    })
}

pub fn ingest_zero_table(path: &Path) -> Result<ZeroTable> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_zero_table(&text, &path.display().to_string())
}

/// Renders records in the table format (round-trips through [`parse_zero_table`]).
pub fn format_zero_table(records: &[ZeroRecord], character: Option<(u64, usize)>) -> String {
    let precision = records
        .iter()
        .map(|r| r.tolerance)
        .fold(0.0_f64, f64::max);
    let precision = if precision > 0.0 { precision } else { DEFAULT_TABLE_PRECISION };
    let mut out = String::new();
    match character {
        Some((q, k)) => {
            let _ = writeln!(out, "# zeros of xi(s, chi) for character {q}:{k}");
            let _ = writeln!(out, "# modulus={q}");
            let _ = writeln!(out, "# index={k}");
        }
        None => {
            let _ = writeln!(out, "# zeros of the Riemann xi function");
        }
    }
    let _ = writeln!(out, "# precision={precision:e}");
    for r in records {
        let _ = writeln!(out, "{:.12}", r.ordinate);
    }
    out
}

pub fn write_zero_table(
    path: &Path,
    records: &[ZeroRecord],
    character: Option<(u64, usize)>,
) -> Result<()> {
    fs::write(path, format_zero_table(records, character)).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

/// The first 10⁴ Riemann zeros shipped with the crate.
pub fn bundled_riemann_zeros() -> ZeroTable {
    parse_zero_table(BUNDLED_RIEMANN, "bundled table").expect("bundled zero table is valid")
}

/// Table named by [`ZERO_TABLE_ENV`] if set, else the bundled one.
pub fn default_riemann_table() -> Result<ZeroTable> {
    match std::env::var_os(ZERO_TABLE_ENV) {
        Some(path) if !path.is_empty() => ingest_zero_table(&PathBuf::from(path)),
        _ => Ok(bundled_riemann_zeros()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::DirichletCharacter;
    use crate::xi::XiFunction;

    #[test]
    fn first_riemann_zeros() {
        let scan = find_zeros(10.0, 30.0, &XiFunction::Riemann, 0.05, None).unwrap();
        let got: Vec<f64> = scan.zeros.iter().map(|z| z.ordinate).collect();
        let want = [14.134_725_141_734_694, 21.022_039_638_771_555, 25.010_857_580_145_689];
        assert_eq!(got.len(), 3);
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() < 1e-8, "{g} vs {w}");
        }
        assert!(scan.suspects.is_empty() && scan.warnings.is_empty());
    }

    #[test]
    fn none_below_ten() {
        let scan = find_zeros(0.0, 10.0, &XiFunction::Riemann, 0.05, None).unwrap();
        assert!(scan.zeros.is_empty());
    }

    #[test]
    fn mod_four_zeros() {
        let chi = DirichletCharacter::new(4, 1).unwrap();
        let f = XiFunction::dirichlet(chi).unwrap();
        let scan = find_zeros(0.0, 11.0, &f, 0.05, Some((4, 1))).unwrap();
        let got: Vec<f64> = scan.zeros.iter().map(|z| z.ordinate).collect();
        assert_eq!(got.len(), 2, "{got:?}");
        assert!((got[0] - 6.020_948_904_697_597).abs() < 1e-8);
        assert!((got[1] - 10.243_770_304_166_555).abs() < 1e-8);
    }

    #[test]
    fn rejects_bad_arguments() {
        let f = XiFunction::Riemann;
        assert!(find_zeros(-1.0, 5.0, &f, 0.01, None).is_err());
        assert!(find_zeros(0.0, 5.0, &f, 0.1, None).is_err());
        assert!(find_zeros(5.0, 1.0, &f, 0.01, None).is_err());
    }

    struct Quadratic(f64, f64);

    impl LineFunction for Quadratic {
        fn line_value(&self, t: f64) -> Result<LineValue> {
            let v = (t - self.0) * (t - self.1);
            Ok(LineValue {
                t,
                sign: if v > 0.0 { 1 } else if v < 0.0 { -1 } else { 0 },
                log_mag: v.abs().ln(),
                imag_ratio: 0.0,
            })
        }
    }

    #[test]
    fn close_pair_warns() {
        let scan = find_zeros(0.0, 2.0, &Quadratic(1.01, 1.07), 0.05, None).unwrap();
        assert_eq!(scan.zeros.len(), 2);
        assert_eq!(scan.warnings.len(), 1);
        assert!(mean_gap(1e6, 1) < mean_gap(1e3, 1));
    }

    #[test]
    fn double_zero_is_a_suspect() {
        let scan = find_zeros(0.0, 2.0, &Quadratic(1.001, 1.001), 0.05, None).unwrap();
        assert!(scan.zeros.is_empty());
        assert_eq!(scan.suspects.len(), 1);
        assert!((scan.suspects[0].t - 1.0).abs() < 1e-12);
    }

    #[test]
    fn parse_examples() {
        let t = parse_zero_table("14.134725142\n21.022039639\n", "x").unwrap();
        assert_eq!(t.records.len(), 2);
        assert_eq!(t.precision, DEFAULT_TABLE_PRECISION);
        assert!(t.records.iter().all(|r| r.source == ZeroSource::Ingested));
        assert!(parse_zero_table("", "x").unwrap().records.is_empty());
        let err = parse_zero_table("abc\n", "bad.txt").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        assert!(err.to_string().contains("line 1"));
    }

    #[test]
    fn parse_headers_crlf_and_order() {
        let text = "# modulus=5\r\n# index=2\r\n# precision=1e-10\r\n\r\n6.6\r\n6.5\r\n";
        let t = parse_zero_table(text, "x").unwrap();
        assert_eq!(t.character, Some((5, 2)));
        assert_eq!(t.records[0].tolerance, 1e-10);
        assert_eq!(t.warnings.len(), 1);
        assert!(t.warnings[0].contains("line 6"));
        assert!(parse_zero_table("-3\n", "x").is_err());
    }

    #[test]
    fn round_trip() {
        let records = vec![
            ZeroRecord {
                ordinate: 6.020_948_904_697_597,
                source: ZeroSource::Computed,
                tolerance: 1e-9,
                character: Some((4, 1)),
            },
            ZeroRecord {
                ordinate: 10.243_770_304_166_555,
                source: ZeroSource::Computed,
                tolerance: 1e-9,
                character: Some((4, 1)),
            },
        ];
        let text = format_zero_table(&records, Some((4, 1)));
        let back = parse_zero_table(&text, "x").unwrap();
        assert_eq!(back.character, Some((4, 1)));
        assert_eq!(back.precision, 1e-9);
        for (a, b) in records.iter().zip(&back.records) {
            assert!((a.ordinate - b.ordinate).abs() < 1e-12);
        }
    }

    #[test]
    fn bundled_table_matches_known_zeros() {
        let t = bundled_riemann_zeros();
        assert_eq!(t.records.len(), 10_000);
        assert!(t.warnings.is_empty());
        assert!((t.records[0].ordinate - 14.134_725_141_734_694).abs() < 1e-9);
        assert!((t.records[28].ordinate - 98.831_194_218_193_692).abs() < 1e-9);
        assert!((t.records[29].ordinate - 101.317_851_005_731_39).abs() < 1e-9);
    }
}
