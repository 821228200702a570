mod args;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use num_complex::Complex64;
use xiphase::characters::character_group;
use xiphase::checks::{
    exclusion_zeros, scan_maxmin_criterion, scan_monotonicity, scan_sign_law, ScanGrid, ScanReport,
};
use xiphase::momentum::{MomentumSource, ZeroSumConfig, ZeroSumModel};
use xiphase::rsz::{direct_z, figure1_rows, rsz_eval, Figure1Row};
use xiphase::xi::{StripPoint, XiFunction};
use xiphase::zeros::{
    default_riemann_table, find_zeros, ingest_zero_table, write_zero_table, ZeroTable,
};
use xiphase::{checks::fmt_num, Error};

use args::{CheckKindArg, Cli, Command, FunctionArgs, ScanKindArg, ZerosAction, ZerosArgs};

const EXIT_ERROR: u8 = 1;
const EXIT_VIOLATIONS: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallelism as usize)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_ERROR);
    }
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: &Cli) -> xiphase::Result<u8> {
    match &cli.command {
        Command::Characters { modulus } => characters(*modulus),
        Command::Xi { t, eps, function } => xi(*t, *eps, function),
        Command::Zeros(args) => zeros(cli, args),
        Command::Scan {
            kind,
            grid,
            function,
            zero_sum,
            inject,
            out,
        } => {
            let grid = ScanGrid::new(grid.t_min, grid.t_max, grid.t_steps, grid.eps_max, grid.eps_steps)?
                .with_exclusion_radius(grid.exclusion_radius)?;
            let (source, zeros): (Box<dyn MomentumSource>, Vec<f64>) = if *zero_sum {
                let table = zero_table(cli)?;
                let injected = inject.iter().map(|&(re, im)| Complex64::new(re, im));
                let cfg = ZeroSumConfig::new(table.records, true).with_injected(injected);
                (Box::new(ZeroSumModel::new(cfg)), Vec::new())
            } else {
                let f = function_of(function)?;
                let zeros = exclusion_zeros(&f, &grid)?;
                (Box::new(f), zeros)
            };
            let report = match kind {
                ScanKindArg::Sign => scan_sign_law(&grid, source.as_ref(), &zeros)?,
                ScanKindArg::Monotone => scan_monotonicity(&grid, source.as_ref(), &zeros)?,
            };
            finish_report(&report, out.as_deref())
        }
        Command::Check {
            kind: CheckKindArg::Maxmin,
            t_min,
            t_max,
            function,
            out,
        } => {
            let f = function_of(function)?;
            let report = scan_maxmin_criterion(*t_min, *t_max, &f, f.label())?;
            finish_report(&report, out.as_deref())
        }
        Command::Rsz { t, eps } => rsz(*t, *eps),
        Command::Figure1 {
            t_list,
            eps_steps,
            out,
        } => {
            let rows = figure1_rows(t_list, *eps_steps)?;
            write_file(out, |w| write_figure1(&rows, w))?;
            println!("rows={}", rows.len());
            println!("out={}", out.display());
            Ok(0)
        }
    }
}

fn function_of(args: &FunctionArgs) -> xiphase::Result<XiFunction> {
    XiFunction::from_label(args.modulus, args.index)
}

fn zero_table(cli: &Cli) -> xiphase::Result<ZeroTable> {
    match &cli.zero_table {
        Some(path) => ingest_zero_table(path),
        None => default_riemann_table(),
    }
}

fn write_file(path: &Path, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> xiphase::Result<()> {
    let io_err = |source| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    let mut w = BufWriter::new(file);
    body(&mut w).map_err(io_err)?;
    w.flush().map_err(io_err)
}

fn finish_report(report: &ScanReport, out: Option<&Path>) -> xiphase::Result<u8> {
    if let Some(path) = out {
        write_file(path, |w| report.write_csv(w))?;
    }
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    for line in report.summary_lines() {
        println!("{line}");
    }
    Ok(if report.summary.violation_count > 0 {
        EXIT_VIOLATIONS
    } else if report.summary.errors > 0 || report.summary.route_disagreements > 0 {
        EXIT_ERROR
    } else {
        0
    })
}

fn characters(modulus: u64) -> xiphase::Result<u8> {
    if modulus == 0 {
        return Err(Error::Domain("modulus must be positive".into()));
    }
    let group = character_group(modulus);
    println!("modulus={modulus}");
    println!("count={}", group.len());
    for chi in &group {
        let values: Vec<String> = (0..modulus).map(|n| chi.value_label(n)).collect();
        println!(
            "character={}:{} order={} parity={} conductor={} primitive={} values={}",
            modulus,
            chi.index(),
            chi.order(),
            if chi.parity() == 0 { "even" } else { "odd" },
            chi.conductor(),
            chi.is_primitive(),
            values.join(",")
        );
    }
    Ok(0)
}

fn xi(t: f64, eps: f64, function: &FunctionArgs) -> xiphase::Result<u8> {
    let f = function_of(function)?;
    let p = StripPoint::new(t, eps);
    let v = f.xi(p)?;
    let e = f.eta(p)?;
    println!("function={}", f.label());
    println!("t={}", fmt_num(t));
    println!("eps={}", fmt_num(eps));
    println!("xi_log_mag={}", fmt_num(v.value.log_mag));
    println!("xi_phase={}", fmt_num(v.value.phase));
    if let Some(z) = v.value.to_complex() {
        println!("xi_re={}", fmt_num(z.re));
        println!("xi_im={}", fmt_num(z.im));
    }
    println!("eta_phase={}", fmt_num(e.value.phase));
    println!("series_rel_error={}", fmt_num(v.series_error.estimated_rel_error));
    println!("series_terms={}", v.series_error.truncation_terms);
    Ok(0)
}

fn zeros(cli: &Cli, args: &ZerosArgs) -> xiphase::Result<u8> {
    if let Some(ZerosAction::Ingest { file }) = &args.action {
        let table = ingest_zero_table(file)?;
        for w in &table.warnings {
            eprintln!("warning: {w}");
        }
        println!("path={}", file.display());
        println!("count={}", table.records.len());
        println!("precision={:e}", table.precision);
        if let Some((q, k)) = table.character {
            println!("character={q}:{k}");
        }
        if let (Some(first), Some(last)) = (table.records.first(), table.records.last()) {
            println!("first={}", fmt_num(first.ordinate));
            println!("last={}", fmt_num(last.ordinate));
        }
        println!("warnings={}", table.warnings.len());
        return Ok(0);
    }
    let (Some(t_min), Some(t_max)) = (args.t_min, args.t_max) else {
        return Err(Error::Domain("--t-min and --t-max are required".into()));
    };
    let f = function_of(&args.function)?;
    let character = f.character().map(|c| (c.modulus(), c.index()));
    let scan = find_zeros(t_min, t_max, &f, args.step, character)?;
    for w in &scan.warnings {
        eprintln!("warning: {w}");
    }
    if let Some(out) = &args.out {
        write_zero_table(out, &scan.zeros, character)?;
    }
    println!("function={}", f.label());
    println!("count={}", scan.zeros.len());
    for z in &scan.zeros {
        println!("zero={:.10}", z.ordinate);
    }
    for s in &scan.suspects {
        println!("suspect={:.10} depth={}", s.t, fmt_num(s.depth));
    }
    if character.is_none() {
        // cross-check against the table wherever it covers the range
        let table = zero_table(cli)?;
        let listed: Vec<f64> = table
            .records
            .iter()
            .map(|r| r.ordinate)
            .filter(|&g| g >= t_min && g <= t_max)
            .collect();
        let covered = table.records.last().is_some_and(|r| r.ordinate >= t_max);
        if covered {
            let max_dev = listed
                .iter()
                .zip(&scan.zeros)
                .map(|(a, b)| (a - b.ordinate).abs())
                .fold(0.0, f64::max);
            println!("table_count={}", listed.len());
            println!("table_max_deviation={}", fmt_num(max_dev));
        }
    }
    Ok(0)
}

fn rsz(t: f64, eps: f64) -> xiphase::Result<u8> {
    let (z, terms) = rsz_eval(t, eps)?;
    println!("t={}", fmt_num(t));
    println!("eps={}", fmt_num(eps));
    println!("n={}", terms.n);
    println!("p={}", fmt_num(terms.p));
    println!("cosh_sum={}", fmt_num(terms.cosh_sum));
    println!("sinh_sum={}", fmt_num(terms.sinh_sum));
    println!("r0={}", fmt_num(terms.r0));
    println!("f_scale_log={}", fmt_num(terms.f_scale_log));
    println!("z_re={}", fmt_num(z.re));
    println!("z_im={}", fmt_num(z.im));
    if t <= 1000.0 {
        let d = direct_z(t, eps)?;
        println!("direct_re={}", fmt_num(d.re));
        println!("direct_im={}", fmt_num(d.im));
        println!("residual={}", fmt_num((z - d).norm()));
    }
    Ok(0)
}

fn write_figure1(rows: &[Figure1Row], w: &mut dyn Write) -> io::Result<()> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(["t", "eps", "z2"])?;
    for r in rows {
        out.write_record([r.t, r.eps, r.z2].map(fmt_num))?;
    }
    out.flush()
}
