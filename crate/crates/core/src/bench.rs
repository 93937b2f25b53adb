//! Wall-time and multiplication-count benchmark over random dense matrices.
//!
//! For every `N` in the configured range, `reps` matrices are drawn with real
//! and imaginary parts uniform in `[-1, 1)` from a ChaCha8 stream seeded by
//! `(seed, N)`. Each benchmarked path fully decomposes every matrix; only the
//! decomposition call is timed. A second, instrumented run supplies the
//! multiplication count and must reproduce the timed result exactly, and all
//! paths must agree with each other bit for bit.

use std::io::Write;
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, PauliDecomposition};
use crate::strategy::{DecomposeOptions, Registry};

/// Largest `N` the harness accepts.
pub const BENCH_MAX_QUBITS: u32 = 8;

/// Strategies timed by default, in output order.
pub const BENCH_PATHS: [&str; 3] = ["fast", "slow", "serial-quaternary"];

pub const CSV_HEADER: &str = "N,path,threads,rep,seed,seconds,mult_count";

/// `rep` value of the per-group mean row.
pub const REP_MEAN: i64 = -1;
/// `rep` value of the per-group standard-deviation row.
pub const REP_STDDEV: i64 = -2;

#[derive(Debug, Clone, PartialEq)]
pub struct BenchConfig {
    pub n_min: u32,
    pub n_max: u32,
    pub reps: usize,
    pub seed: u64,
    /// When above 1, the fast path is also timed with this many workers.
    pub threads: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            n_min: 1,
            n_max: 7,
            reps: 20,
            seed: 1,
            threads: 1,
        }
    }
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_min < 1 || self.n_min > self.n_max || self.n_max > BENCH_MAX_QUBITS {
            return Err(Error::InvalidArgument(format!(
                "N range {}..={} must lie within 1..={BENCH_MAX_QUBITS}",
                self.n_min, self.n_max
            )));
        }
        if self.reps == 0 {
            return Err(Error::InvalidArgument("reps must be at least 1".to_owned()));
        }
        if self.threads == 0 {
            return Err(Error::ZeroThreads);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub num_qubits: u32,
    pub path: String,
    pub threads: usize,
    /// Repetition index, or [`REP_MEAN`] / [`REP_STDDEV`] for summary rows.
    pub rep: i64,
    pub seed: u64,
    pub seconds: f64,
    pub mult_count: f64,
}

impl BenchRecord {
    pub fn is_summary(&self) -> bool {
        self.rep < 0
    }

    pub fn to_csv_row(&self) -> String {
        let count = if self.rep == REP_STDDEV {
            format!("{:?}", self.mult_count)
        } else {
            format!("{}", self.mult_count as u64)
        };
        format!(
            "{},{},{},{},{},{:?},{}",
            self.num_qubits, self.path, self.threads, self.rep, self.seed, self.seconds, count
        )
    }
}

/// Random dense matrix with entries uniform in `[-1, 1) + [-1, 1) i`.
pub fn random_matrix(num_qubits: u32, rng: &mut impl Rng) -> Result<DenseMatrix> {
    DenseMatrix::from_fn(num_qubits, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    })
}

/// Generator used for the matrices of one `N`.
pub fn matrix_rng(seed: u64, num_qubits: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(num_qubits as u64);
    rng
}

fn mean_stddev(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    if xs.len() < 2 {
        return (mean, 0.0);
    }
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, var.sqrt())
}

/// Runs the benchmark; see the module docs for the procedure.
pub fn run_bench(cfg: &BenchConfig, registry: &Registry) -> Result<Vec<BenchRecord>> {
    cfg.validate()?;
    let mut paths: Vec<(&str, usize)> = BENCH_PATHS.iter().map(|&p| (p, 1)).collect();
    if cfg.threads > 1 {
        paths.push(("fast", cfg.threads));
    }
    let strategies = paths
        .iter()
        .map(|&(name, threads)| Ok((registry.get(name)?, threads)))
        .collect::<Result<Vec<_>>>()?;

    let mut records = Vec::new();
    for num_qubits in cfg.n_min..=cfg.n_max {
        let mut rng = matrix_rng(cfg.seed, num_qubits);
        let mut times = vec![Vec::with_capacity(cfg.reps); strategies.len()];
        let mut counts = vec![Vec::with_capacity(cfg.reps); strategies.len()];
        for rep in 0..cfg.reps {
            let g = random_matrix(num_qubits, &mut rng)?;
            let mut reference: Option<PauliDecomposition> = None;
            for (k, &(strategy, threads)) in strategies.iter().enumerate() {
                let opts = DecomposeOptions { threads };
                let start = Instant::now();
                let d = strategy.decompose(&g, &opts)?;
                let seconds = start.elapsed().as_secs_f64();

                let (counted, count) = strategy.decompose_counted(&g, &opts)?;
                let count = count.unwrap_or(0);
                if counted != d {
                    return Err(Error::Mismatch(format!(
                        "{} instrumented run differs at N={num_qubits}",
                        strategy.name()
                    )));
                }
                match &reference {
                    None => reference = Some(d),
                    Some(r) if *r != d => {
                        return Err(Error::Mismatch(format!(
                            "{} differs from {} at N={num_qubits}, rep {rep}",
                            strategy.name(),
                            strategies[0].0.name()
                        )))
                    }
                    Some(_) => {}
                }
                times[k].push(seconds);
                counts[k].push(count as f64);
                records.push(BenchRecord {
                    num_qubits,
                    path: strategy.name().to_owned(),
                    threads,
                    rep: rep as i64,
                    seed: cfg.seed,
                    seconds,
                    mult_count: count as f64,
                });
            }
        }
        for (k, &(strategy, threads)) in strategies.iter().enumerate() {
            let (t_mean, t_std) = mean_stddev(&times[k]);
            let (c_mean, c_std) = mean_stddev(&counts[k]);
            for (rep, seconds, mult_count) in
                [(REP_MEAN, t_mean, c_mean), (REP_STDDEV, t_std, c_std)]
            {
                records.push(BenchRecord {
                    num_qubits,
                    path: strategy.name().to_owned(),
                    threads,
                    rep,
                    seed: cfg.seed,
                    seconds,
                    mult_count,
                });
            }
        }
    }
    Ok(records)
}

pub fn write_csv(mut out: impl Write, records: &[BenchRecord]) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.to_csv_row())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> BenchConfig {
        BenchConfig {
            n_min: 1,
            n_max: 3,
            reps: 3,
            seed: 42,
            threads: 1,
        }
    }

    #[test]
    fn seeded_runs_repeat_matrices_and_counts() {
        let a = random_matrix(3, &mut matrix_rng(42, 3)).unwrap();
        let b = random_matrix(3, &mut matrix_rng(42, 3)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, random_matrix(3, &mut matrix_rng(43, 3)).unwrap());
        assert!(a
            .elements()
            .iter()
            .all(|z| (-1.0..1.0).contains(&z.re) && (-1.0..1.0).contains(&z.im)));

        let reg = Registry::default();
        let run1 = run_bench(&small(), &reg).unwrap();
        let run2 = run_bench(&small(), &reg).unwrap();
        let counts = |rs: &[BenchRecord]| {
            rs.iter()
                .map(|r| (r.path.clone(), r.rep, r.mult_count.to_bits()))
                .collect::<Vec<_>>()
        };
        assert_eq!(counts(&run1), counts(&run2));
        // 3 N values x (3 paths x 3 reps + 3 paths x 2 summary rows)
        assert_eq!(run1.len(), 3 * (9 + 6));
        assert!(run1
            .iter()
            .filter(|r| !r.is_summary())
            .all(|r| r.seconds > 0.0));
    }

    #[test]
    fn count_ratio_and_growth() {
        let cfg = BenchConfig {
            n_min: 5,
            n_max: 6,
            reps: 1,
            ..small()
        };
        let recs = run_bench(&cfg, &Registry::default()).unwrap();
        let count = |n, path: &str| {
            recs.iter()
                .find(|r| r.num_qubits == n && r.path == path && r.rep == 0)
                .unwrap()
                .mult_count
        };
        let ratio = count(6, "slow") / count(6, "fast");
        assert!((3.0..=12.0).contains(&ratio), "{ratio}");
        let growth = count(6, "fast") / count(5, "fast");
        assert!((growth - 8.0).abs() < 0.1, "{growth}");
    }

    #[test]
    fn extra_thread_count_is_a_separate_row() {
        let cfg = BenchConfig {
            n_min: 2,
            n_max: 2,
            reps: 1,
            threads: 4,
            ..small()
        };
        let recs = run_bench(&cfg, &Registry::default()).unwrap();
        assert!(recs
            .iter()
            .any(|r| r.path == "fast" && r.threads == 4 && r.rep == 0));
    }

    #[test]
    fn rejects_bad_configs() {
        let reg = Registry::default();
        for cfg in [
            BenchConfig {
                n_max: 9,
                ..small()
            },
            BenchConfig {
                n_min: 0,
                ..small()
            },
            BenchConfig {
                n_min: 4,
                n_max: 3,
                ..small()
            },
            BenchConfig { reps: 0, ..small() },
        ] {
            assert!(run_bench(&cfg, &reg).is_err(), "{cfg:?}");
        }
    }

    #[test]
    fn csv_shape() {
        let cfg = BenchConfig {
            n_max: 1,
            reps: 2,
            ..small()
        };
        let recs = run_bench(&cfg, &Registry::default()).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &recs).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some(CSV_HEADER));
        for line in lines {
            assert_eq!(line.split(',').count(), 7, "{line}");
        }
        assert!(text.contains("\n1,fast,1,-1,42,"));
    }
}
