use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "xiphase", version, about = "Angular momentum of the completed Riemann and Dirichlet xi functions")]
pub struct Cli {
    /// Worker threads.
    #[arg(long, global = true, default_value_t = default_parallelism(), value_parser = clap::value_parser!(u64).range(1..))]
    pub parallelism: u64,

    /// Riemann zero table (defaults to $XI_ZERO_TABLE, then the bundled table).
    #[arg(long, global = true)]
    pub zero_table: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

fn default_parallelism() -> u64 {
    std::thread::available_parallelism().map_or(1, |n| n.get() as u64)
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the Dirichlet characters of a modulus.
    Characters {
        #[arg(long)]
        modulus: u64,
    },
    /// Evaluate xi and eta at one point.
    Xi {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eps: f64,
        #[command(flatten)]
        function: FunctionArgs,
    },
    /// Find critical-line zeros, or ingest a zero table.
    Zeros(ZerosArgs),
    /// Scan the strip for the sign law or the monotonicity of |xi|.
    Scan {
        kind: ScanKindArg,
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        function: FunctionArgs,
        /// Evaluate L-hat through the zero sum over the zero table instead of xi.
        #[arg(long, conflicts_with_all = ["modulus", "index"])]
        zero_sum: bool,
        /// Extra zero for the zero sum, as RE,IM (repeatable).
        #[arg(long, requires = "zero_sum", value_parser = parse_complex, allow_negative_numbers = true)]
        inject: Vec<(f64, f64)>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Critical-line criteria.
    Check {
        kind: CheckKindArg,
        #[arg(long)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hyperbolic Riemann-Siegel expansion at one point.
    Rsz {
        #[arg(long)]
        t: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        eps: f64,
    },
    /// |Z(t, eps)|^2 on eps in [0, 1/2] for a list of heights.
    Figure1 {
        #[arg(long, value_delimiter = ',', default_value = "100,200,500")]
        t_list: Vec<f64>,
        #[arg(long, default_value_t = 51)]
        eps_steps: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FunctionArgs {
    /// Character modulus (omit for the Riemann xi).
    #[arg(long)]
    pub modulus: Option<u64>,
    /// Character index within the modulus (default 1).
    #[arg(long, requires = "modulus")]
    pub index: Option<usize>,
}

#[derive(Debug, Args)]
#[command(args_conflicts_with_subcommands = true, subcommand_negates_reqs = true)]
pub struct ZerosArgs {
    #[command(subcommand)]
    pub action: Option<ZerosAction>,
    #[arg(long, required = true)]
    pub t_min: Option<f64>,
    #[arg(long, required = true)]
    pub t_max: Option<f64>,
    #[arg(long, default_value_t = 0.01)]
    pub step: f64,
    #[command(flatten)]
    pub function: FunctionArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ZerosAction {
    /// Read and validate a zero table.
    Ingest { file: PathBuf },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct GridArgs {
    #[arg(long)]
    pub t_min: f64,
    #[arg(long)]
    pub t_max: f64,
    #[arg(long)]
    pub t_steps: usize,
    #[arg(long)]
    pub eps_max: f64,
    #[arg(long)]
    pub eps_steps: usize,
    #[arg(long, default_value_t = xiphase::checks::DEFAULT_EXCLUSION_RADIUS)]
    pub exclusion_radius: f64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ScanKindArg {
    Sign,
    Monotone,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CheckKindArg {
    Maxmin,
}

fn parse_complex(s: &str) -> Result<(f64, f64), String> {
    let (re, im) = s.split_once(',').ok_or_else(|| format!("expected RE,IM, got {s:?}"))?;
    let p = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}"));
    Ok((p(re)?, p(im)?))
}
