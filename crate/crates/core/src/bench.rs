//! Serial-versus-parallel timing over a grid of problem sizes.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::io::{generate_random, GENERATOR_NAME};
use crate::lcs::lcs_fill_serial_with_budget;
use crate::parallel::{default_workers, ParallelConfig, WavefrontFiller, DEFAULT_BLOCK_SIZE};
use crate::sequence::{Sequence, DNA};

/// The thirteen `(M, N)` pairs of the reference experiment.
pub const TABLE1_SIZES: [(usize, usize); 13] = [
    (10, 5),
    (100, 10),
    (200, 30),
    (500, 80),
    (800, 100),
    (1000, 150),
    (2000, 200),
    (5000, 200),
    (5000, 400),
    (5000, 800),
    (5000, 1000),
    (10000, 1000),
    (10000, 1500),
];

pub const DEFAULT_REPETITIONS: usize = 3;

/// XORed into the case seed to derive the child sequence's seed.
pub const CHILD_SEED_SALT: u64 = 0x9E37_79B9_7F4A_7C15;

/// Measured durations are floored here; a zero reading means the fill was
/// below clock resolution.
pub const MIN_SECONDS: f64 = 1e-9;

pub const CSV_HEADER: &str = "M,N,workers,block_size,serial_s,parallel_s,speedup,lcs_length";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchCase {
    pub m: usize,
    pub n: usize,
    pub workers: usize,
    pub block_size: usize,
    pub seed: u64,
    pub repetitions: usize,
}

impl BenchCase {
    pub fn new(m: usize, n: usize, workers: usize) -> Self {
        BenchCase {
            m,
            n,
            workers,
            block_size: DEFAULT_BLOCK_SIZE,
            seed: 1,
            repetitions: DEFAULT_REPETITIONS,
        }
    }

    pub fn with_block_size(self, block_size: usize) -> Self {
        BenchCase { block_size, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        BenchCase { seed, ..self }
    }

    pub fn with_repetitions(self, repetitions: usize) -> Self {
        BenchCase { repetitions, ..self }
    }

    /// Parent and child sequences, regenerated from `(seed, M, N)`.
    pub fn inputs(&self) -> Result<(Sequence, Sequence)> {
        Ok((
            generate_random(self.m, DNA, self.seed)?,
            generate_random(self.n, DNA, self.seed ^ CHILD_SEED_SALT)?,
        ))
    }

    fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::Config("repetitions must be at least 1".into()));
        }
        ParallelConfig::new(self.workers, self.block_size).validate()
    }
}

/// The reference grid crossed with every requested worker count.
pub fn table1_cases(workers: &[usize], block_size: usize, seed: u64, repetitions: usize) -> Vec<BenchCase> {
    grid_cases(&TABLE1_SIZES, workers, block_size, seed, repetitions)
}

pub fn grid_cases(
    sizes: &[(usize, usize)],
    workers: &[usize],
    block_size: usize,
    seed: u64,
    repetitions: usize,
) -> Vec<BenchCase> {
    sizes
        .iter()
        .flat_map(|&(m, n)| {
            workers.iter().map(move |&w| {
                BenchCase::new(m, n, w)
                    .with_block_size(block_size)
                    .with_seed(seed)
                    .with_repetitions(repetitions)
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub case: BenchCase,
    pub serial_seconds: f64,
    /// Minimum over the case's repetitions.
    pub parallel_seconds: f64,
    /// `serial_seconds / parallel_seconds` at full precision.
    pub speedup: f64,
    pub lcs_length: u32,
}

impl BenchRecord {
    /// The three real-valued CSV fields. The reported speedup is the ratio of
    /// the two times as written, so a reader recomputing it from the file
    /// agrees to within rounding of the last digit.
    pub fn reported_fields(&self) -> (String, String, String) {
        let s = format!("{:.9}", self.serial_seconds);
        let p = format!("{:.9}", self.parallel_seconds);
        let ratio = s.parse::<f64>().unwrap_or(f64::NAN) / p.parse::<f64>().unwrap_or(f64::NAN);
        (s, p, format!("{ratio:.2}"))
    }
}

/// Run `f` and return its result together with its wall time in seconds.
pub fn time_fill<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64())
}

pub fn speedup(serial: f64, parallel: f64) -> Result<f64> {
    if parallel.is_nan() || parallel <= 0.0 {
        return Err(Error::Config(format!(
            "parallel time must be positive, got {parallel}"
        )));
    }
    Ok(serial / parallel)
}

/// Time one case: one untimed warm-up fill, one timed serial fill, then
/// `repetitions` timed parallel fills. An [`Error::Equivalence`] here means
/// a broken fill.
pub fn run_case(case: &BenchCase) -> Result<BenchRecord> {
    case.validate()?;
    let (x, y) = case.inputs()?;
    let cfg = ParallelConfig {
        workers: case.workers,
        block_size: case.block_size,
        ..Default::default()
    };

    let filler = WavefrontFiller::new(cfg)?;
    // Untimed, so the serial measurement does not pay for first-touch page
    // faults that the later parallel repetitions would not see.
    drop(filler.fill(&x, &y)?);

    let (serial, serial_seconds) = time_fill(|| lcs_fill_serial_with_budget(&x, &y, cfg.memory_budget));
    let (sdp, sbt) = serial?;

    let mut parallel_seconds = f64::INFINITY;
    for rep in 0..case.repetitions {
        let ((dp, bt), t) = {
            let (filled, t) = time_fill(|| filler.fill(&x, &y));
            let (dp, bt, _) = filled?;
            ((dp, bt), t)
        };
        parallel_seconds = parallel_seconds.min(t);
        let detail = if dp.lcs_length() != sdp.lcs_length() {
            Some(format!(
                "LCS length {} (parallel) vs {} (serial), repetition {rep}",
                dp.lcs_length(),
                sdp.lcs_length()
            ))
        } else if dp != sdp || bt != sbt {
            Some(format!("tables differ on repetition {rep}"))
        } else {
            None
        };
        if let Some(detail) = detail {
            return Err(Error::Equivalence {
                m: case.m,
                n: case.n,
                workers: case.workers,
                block_size: case.block_size,
                detail,
            });
        }
    }

    let serial_seconds = serial_seconds.max(MIN_SECONDS);
    let parallel_seconds = parallel_seconds.max(MIN_SECONDS);
    Ok(BenchRecord {
        case: *case,
        serial_seconds,
        parallel_seconds,
        speedup: speedup(serial_seconds, parallel_seconds)?,
        lcs_length: sdp.lcs_length(),
    })
}

/// Records for the cases that ran, plus the cases that could not.
#[derive(Debug, Default)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub failures: Vec<(BenchCase, Error)>,
}

/// Run every case in order. Per-case errors are collected; a serial/parallel
/// disagreement aborts the whole run.
pub fn run_benchmark(cases: &[BenchCase]) -> Result<BenchReport> {
    let mut report = BenchReport::default();
    for case in cases {
        match run_case(case) {
            Ok(r) => report.records.push(r),
            Err(e @ Error::Equivalence { .. }) => return Err(e),
            Err(e) => report.failures.push((*case, e)),
        }
    }
    Ok(report)
}

pub fn write_csv(records: &[BenchRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    write_csv_to(records, &mut w)
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))
}

pub fn write_csv_to<W: Write>(records: &[BenchRecord], w: &mut W) -> io::Result<()> {
    let seeds: BTreeSet<u64> = records.iter().map(|r| r.case.seed).collect();
    let seeds: Vec<String> = seeds.iter().map(u64::to_string).collect();
    writeln!(w, "# generator: {GENERATOR_NAME}")?;
    writeln!(
        w,
        "# seed policy: parent = generate(M, ACGT, seed); child = generate(N, ACGT, seed ^ {CHILD_SEED_SALT:#018x})"
    )?;
    writeln!(w, "# seeds: {}", seeds.join(" "))?;
    writeln!(w, "# host_workers: {}", default_workers())?;
    writeln!(
        w,
        "# timing: monotonic clock around the table fill; parallel_s is the minimum over repetitions"
    )?;
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        let (s, p, sp) = r.reported_fields();
        writeln!(
            w,
            "{},{},{},{},{s},{p},{sp},{}",
            r.case.m, r.case.n, r.case.workers, r.case.block_size, r.lcs_length
        )?;
    }
    Ok(())
}

/// Human-readable table of results.
pub fn format_summary(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>7} {:>7} {:>7} {:>6} {:>12} {:>12} {:>8} {:>7}",
        "M", "N", "workers", "block", "serial (s)", "parallel (s)", "speedup", "lcs"
    );
    for r in records {
        let _ = writeln!(
            out,
            "{:>7} {:>7} {:>7} {:>6} {:>12.9} {:>12.9} {:>8.2} {:>7}",
            r.case.m,
            r.case.n,
            r.case.workers,
            r.case.block_size,
            r.serial_seconds,
            r.parallel_seconds,
            r.speedup,
            r.lcs_length
        );
    }
    out
}
