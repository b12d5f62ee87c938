//! Runtime-scaling measurement: time a driver across ascending sizes and
//! summarize growth as the log-log slope of the median times.

use std::io::{self, Write};
use std::time::Instant;

use repseq_core::{check_mode_limits, run_mode, DriverOptions, Limits, Mode};

use crate::error::BenchError;
use crate::gen::{gen_string, GenKind};

/// One timed driver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub mode: Mode,
    pub n: usize,
    pub sigma: usize,
    pub seed: u64,
    pub rep: usize,
    pub nanos: u64,
    pub length: usize,
}

#[derive(Debug, Clone)]
pub struct ScalingConfig {
    pub mode: Mode,
    /// Strictly ascending input sizes. All sizes share the seed, so the
    /// smaller inputs are prefixes of the larger ones.
    pub sizes: Vec<usize>,
    pub sigma: usize,
    pub seed: u64,
    /// Measured repetitions per size; one extra warm-up run per size is
    /// taken first and discarded.
    pub reps: usize,
    /// Worker threads; measurements run single-threaded unless raised.
    pub threads: usize,
}

#[derive(Debug, Clone)]
pub struct ScalingReport {
    /// Rows in (size, repetition) order.
    pub records: Vec<BenchRecord>,
    /// Lower median of the measured nanos per size.
    pub medians: Vec<(usize, u64)>,
    /// Least-squares slope of ln(median nanos) against ln(n); 0 when only
    /// one size was measured.
    pub slope: f64,
    pub threads: usize,
}

pub fn run_scaling(cfg: &ScalingConfig) -> Result<ScalingReport, BenchError> {
    if cfg.sizes.is_empty() || cfg.sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(BenchError::SizesNotAscending);
    }
    if cfg.reps == 0 {
        return Err(BenchError::InvalidReps);
    }
    let limits = Limits::default();
    for &n in &cfg.sizes {
        check_mode_limits(cfg.mode, n, &limits)?;
    }
    let threads = cfg.threads.max(1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("bench thread pool");
    let opts = DriverOptions::default();
    let mut records = Vec::with_capacity(cfg.sizes.len() * cfg.reps);
    let mut medians = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        let text = gen_string(GenKind::Random, n, cfg.sigma, cfg.seed)?;
        let warm = pool.install(|| run_mode(cfg.mode, &text, &opts))?;
        let mut times = Vec::with_capacity(cfg.reps);
        for rep in 0..cfg.reps {
            let started = Instant::now();
            let a = pool.install(|| run_mode(cfg.mode, &text, &opts))?;
            let nanos = started.elapsed().as_nanos() as u64;
            assert_eq!(a.length, warm.length, "driver must be deterministic");
            records.push(BenchRecord {
                mode: cfg.mode,
                n,
                sigma: cfg.sigma,
                seed: cfg.seed,
                rep,
                nanos,
                length: a.length,
            });
            times.push(nanos);
        }
        times.sort_unstable();
        medians.push((n, times[(cfg.reps - 1) / 2]));
    }
    let slope = log_log_slope(&medians);
    Ok(ScalingReport { records, medians, slope, threads })
}

/// Least-squares slope of ln(nanos) against ln(n).
pub fn log_log_slope(points: &[(usize, u64)]) -> f64 {
    if points.len() < 2 {
        return 0.0;
    }
    let xs: Vec<f64> = points.iter().map(|&(n, _)| (n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|&(_, t)| (t.max(1) as f64).ln()).collect();
    let mx = xs.iter().sum::<f64>() / xs.len() as f64;
    let my = ys.iter().sum::<f64>() / ys.len() as f64;
    let num: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    num / den
}

/// Fixed CSV layout; a trailing `threads` column appears only for
/// multi-threaded runs.
pub fn write_csv<W: Write>(report: &ScalingReport, out: &mut W) -> io::Result<()> {
    let multi = report.threads > 1;
    if multi {
        writeln!(out, "mode,n,sigma,seed,rep,nanos,length,threads")?;
    } else {
        writeln!(out, "mode,n,sigma,seed,rep,nanos,length")?;
    }
    for r in &report.records {
        write!(
            out,
            "{},{},{},{},{},{},{}",
            r.mode.token(),
            r.n,
            r.sigma,
            r.seed,
            r.rep,
            r.nanos,
            r.length
        )?;
        if multi {
            write!(out, ",{}", report.threads)?;
        }
        writeln!(out)?;
    }
    Ok(())
}
