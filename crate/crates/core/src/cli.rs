//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for bad input or usage, 2 for internal failures.
//! Diagnostics and summaries go to standard error.

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use crate::bench::{self, BenchConfig, BENCH_MAX_QUBITS};
use crate::decompose::{coeff_fast, recompose};
use crate::error::{Error, Result};
use crate::io::{self as fileio, format_float, MatrixFormat};
use crate::pauli::string_to_index;
use crate::strategy::{DecomposeOptions, Registry};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "dense-pauli",
    version,
    about = "Decompose dense complex matrices into Pauli strings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute every Pauli coefficient of a matrix file.
    Decompose(DecomposeArgs),
    /// Rebuild a matrix from a coefficient file.
    Recompose(RecomposeArgs),
    /// Compute a single coefficient.
    Coeff(CoeffArgs),
    /// Time the decomposition paths on random matrices and emit CSV.
    Bench(BenchArgs),
}

fn parse_threads(s: &str) -> std::result::Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".to_owned()),
        Ok(t) => Ok(t),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_eps(s: &str) -> std::result::Result<f64, String> {
    match s.parse::<f64>() {
        Ok(e) if e >= 0.0 && e.is_finite() => Ok(e),
        Ok(_) => Err("must be a finite value >= 0".to_owned()),
        Err(e) => Err(e.to_string()),
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    /// Matrix file, `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    /// Coefficient CSV, `-` for stdout.
    #[arg(long = "out", default_value = "-")]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
    pub format: MatrixFormat,
    /// Only write coefficients with modulus above this; 0 writes all.
    #[arg(long, default_value_t = 0.0, value_parser = parse_eps, allow_negative_numbers = true)]
    pub eps: f64,
    #[arg(long, default_value_t = default_threads(), value_parser = parse_threads)]
    pub threads: usize,
    /// Use the single-threaded quaternary Gray-code driver.
    #[arg(long)]
    pub serial: bool,
}

#[derive(Debug, Args)]
pub struct RecomposeArgs {
    /// Coefficient CSV, `-` for stdin.
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    /// Matrix file, `-` for stdout.
    #[arg(long = "out", default_value = "-")]
    pub output: PathBuf,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
    pub format: MatrixFormat,
}

#[derive(Debug, Args)]
pub struct CoeffArgs {
    /// Pauli label such as `XIZY`; the rightmost character is qubit 0.
    pub label: String,
    #[arg(long = "in", default_value = "-")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = MatrixFormat::Text)]
    pub format: MatrixFormat,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 1)]
    pub n_min: u32,
    #[arg(long, default_value_t = 7)]
    pub n_max: u32,
    #[arg(long, default_value_t = 20)]
    pub reps: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also time the fast path with this many workers.
    #[arg(long, default_value_t = 1, value_parser = parse_threads)]
    pub threads: usize,
    /// CSV destination, `-` for stdout.
    #[arg(long = "out", default_value = "-")]
    pub output: PathBuf,
}

pub fn run_decompose(args: &DecomposeArgs) -> Result<()> {
    let registry = Registry::default();
    let g = fileio::read_matrix(&args.input, args.format)?;
    let strategy = registry.get(if args.serial {
        "serial-quaternary"
    } else {
        "fast"
    })?;
    let start = Instant::now();
    let d = strategy.decompose(
        &g,
        &DecomposeOptions {
            threads: args.threads,
        },
    )?;
    let seconds = start.elapsed().as_secs_f64();
    let written = fileio::write_coefficients(&d, &args.output, args.eps)?;
    eprintln!(
        "N={} path={} threads={} coefficients={} written={} eps={} seconds={seconds:.6}",
        g.num_qubits(),
        strategy.name(),
        if strategy.is_parallel() {
            args.threads
        } else {
            1
        },
        d.coefficients().len(),
        written,
        args.eps,
    );
    Ok(())
}

pub fn run_recompose(args: &RecomposeArgs) -> Result<()> {
    let d = fileio::read_coefficients(&args.input)?;
    let g = recompose(&d)?;
    fileio::write_matrix(&args.output, args.format, &g)?;
    eprintln!("N={} dim={}", g.num_qubits(), g.dim());
    Ok(())
}

pub fn run_coeff(args: &CoeffArgs) -> Result<()> {
    let g = fileio::read_matrix(&args.input, args.format)?;
    let n = string_to_index(&args.label, g.num_qubits())?;
    let c = coeff_fast(&g, n)?;
    let mut out = io::stdout().lock();
    writeln!(out, "{},{}", format_float(c.re), format_float(c.im))?;
    Ok(())
}

pub fn run_bench(args: &BenchArgs) -> Result<()> {
    let cfg = BenchConfig {
        n_min: args.n_min,
        n_max: args.n_max,
        reps: args.reps,
        seed: args.seed,
        threads: args.threads,
    };
    if cfg.n_max > BENCH_MAX_QUBITS {
        return Err(Error::InvalidArgument(format!(
            "--n-max {} exceeds the benchmark cap of {BENCH_MAX_QUBITS}",
            cfg.n_max
        )));
    }
    let records = bench::run_bench(&cfg, &Registry::default())?;
    let mut out = fileio::open_output(&args.output)?;
    bench::write_csv(&mut out, &records)?;
    out.flush()?;
    Ok(())
}

pub fn dispatch(cli: &Cli) -> Result<()> {
    match &cli.command {
        Command::Decompose(a) => run_decompose(a),
        Command::Recompose(a) => run_recompose(a),
        Command::Coeff(a) => run_coeff(a),
        Command::Bench(a) => run_bench(a),
    }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USER } else { EXIT_OK };
        }
    };
    match dispatch(&cli) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                EXIT_INTERNAL
            } else {
                EXIT_USER
            }
        }
    }
}
