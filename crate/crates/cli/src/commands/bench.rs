//! Closed-form against repeated multiplication on a seeded elliptic matrix.

use std::hint::black_box;
use std::time::Instant;

use latticeprop::{boost, closed_power, naive_power, rotation, Mat2};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::args::{BenchArgs, Format};
use crate::error::CliError;
use crate::render::{csv_line, csv_table, json, opt_float};
use crate::Outcome;

/// Naive powering above this is extrapolated from the largest measured rate.
pub const NAIVE_CAP: u64 = 10_000_000;
pub const MAX_N: u64 = 1_000_000_000;
pub const MIN_REPEATS: usize = 5;
/// Bound on the relative deviation between the two methods.
pub const DEVIATION_TOL: f64 = 1e-8;
/// Bound on max/min of the closed-form medians across the N list.
pub const CLOSED_RATIO_TOL: f64 = 3.0;

pub const CSV_HEADER: &str = "n,closed_ns,naive_ns,naive_extrapolated,deviation";

#[derive(Debug, Clone)]
pub struct BenchOptions {
    pub n: Vec<u64>,
    pub seed: u64,
    pub repeats: usize,
    pub timings: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchEntry {
    pub n: u64,
    /// Median wall time per call in ns.
    pub closed_ns: Option<f64>,
    pub naive_ns: Option<f64>,
    pub naive_extrapolated: bool,
    /// Relative deviation of the two results; absent where naive was not run.
    pub deviation: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchReport {
    pub seed: u64,
    pub matrix: [f64; 4],
    pub half_trace: f64,
    pub repeats: usize,
    pub naive_cap: u64,
    pub entries: Vec<BenchEntry>,
    pub closed_ratio: Option<f64>,
    pub naive_ratio: Option<f64>,
    pub max_deviation: Option<f64>,
    pub passed: bool,
    pub failures: Vec<String>,
}

/// `rotation(a)·boost(l)·rotation(b)` with half-trace at most 0.9 in size.
pub fn workload(seed: u64) -> Mat2 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let a = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let l = rng.gen_range(0.0..1.0);
        let b = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        let m = rotation(a).unwrap() * boost(l).unwrap() * rotation(b).unwrap();
        if m.half_trace().abs() <= 0.9 {
            return m;
        }
    }
}

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    let k = v.len() / 2;
    if v.len() % 2 == 1 {
        v[k]
    } else {
        0.5 * (v[k - 1] + v[k])
    }
}

/// Median over `repeats` batches of the per-call time of `f`.
fn time_per_call(repeats: usize, calls: u64, mut f: impl FnMut()) -> f64 {
    let samples = (0..repeats)
        .map(|_| {
            let start = Instant::now();
            for _ in 0..calls {
                f();
            }
            start.elapsed().as_nanos() as f64 / calls as f64
        })
        .collect();
    median(samples)
}

pub fn run_bench(opts: &BenchOptions) -> Result<BenchReport, CliError> {
    if opts.n.is_empty() {
        return Err(CliError::input("bench needs at least one N"));
    }
    if let Some(n) = opts.n.iter().find(|&&n| n > MAX_N) {
        return Err(CliError::input(format!("N = {n} exceeds {MAX_N}")));
    }
    if opts.repeats < MIN_REPEATS {
        return Err(CliError::input(format!(
            "--repeats must be at least {MIN_REPEATS}"
        )));
    }
    let m = workload(opts.seed);
    let mut entries = Vec::with_capacity(opts.n.len());
    let mut rate: Option<(u64, f64)> = None;

    for &n in &opts.n {
        let closed = closed_power(&m, n)?;
        let (naive, deviation) = if n <= NAIVE_CAP {
            let p = naive_power(&m, n)?;
            (Some(p), Some(closed.rel_diff(&p)))
        } else {
            (None, None)
        };
        let (closed_ns, naive_ns) = if opts.timings {
            let c = time_per_call(opts.repeats, 20_000, || {
                black_box(closed_power(black_box(&m), black_box(n)).ok());
            });
            let nv = naive.map(|_| {
                let calls = (2_000_000 / n.max(1)).clamp(1, 10_000);
                let t = time_per_call(opts.repeats, calls, || {
                    black_box(naive_power(black_box(&m), black_box(n)).ok());
                });
                if rate.is_none_or(|(k, _)| n > k) {
                    rate = Some((n, t / n.max(1) as f64));
                }
                t
            });
            (Some(c), nv)
        } else {
            (None, None)
        };
        entries.push(BenchEntry {
            n,
            closed_ns,
            naive_ns,
            naive_extrapolated: naive.is_none(),
            deviation,
        });
    }
    if let Some((_, per_step)) = rate {
        for e in entries.iter_mut().filter(|e| e.naive_extrapolated) {
            e.naive_ns = Some(per_step * e.n as f64);
        }
    }

    let spread = |vals: Vec<f64>| -> Option<f64> {
        let max = vals.iter().cloned().reduce(f64::max)?;
        let min = vals.iter().cloned().reduce(f64::min)?;
        Some(max / min)
    };
    let closed_ratio = spread(entries.iter().filter_map(|e| e.closed_ns).collect());
    let naive_ratio = {
        let lo = entries.iter().min_by_key(|e| e.n).and_then(|e| e.naive_ns);
        let hi = entries.iter().max_by_key(|e| e.n).and_then(|e| e.naive_ns);
        lo.zip(hi).map(|(lo, hi)| hi / lo)
    };
    let max_deviation = entries.iter().filter_map(|e| e.deviation).reduce(f64::max);

    let mut failures = Vec::new();
    if let Some(d) = max_deviation.filter(|d| d.is_nan() || *d > DEVIATION_TOL) {
        failures.push(format!(
            "max relative deviation {d:e} exceeds {DEVIATION_TOL:e}"
        ));
    }
    if let Some(r) = closed_ratio.filter(|r| *r > CLOSED_RATIO_TOL) {
        failures.push(format!(
            "closed-form time ratio {r:.3} exceeds {CLOSED_RATIO_TOL}"
        ));
    }
    Ok(BenchReport {
        seed: opts.seed,
        matrix: m.entries(),
        half_trace: m.half_trace(),
        repeats: opts.repeats,
        naive_cap: NAIVE_CAP,
        entries,
        closed_ratio,
        naive_ratio,
        max_deviation,
        passed: failures.is_empty(),
        failures,
    })
}

pub fn run(args: &BenchArgs, format: Format) -> Result<Outcome, CliError> {
    let report = run_bench(&BenchOptions {
        n: args.n.clone(),
        seed: args.seed,
        repeats: args.repeats,
        timings: !args.no_timings,
    })?;
    let body = match format {
        Format::Json => json(&report)?,
        Format::Csv => csv_table(
            CSV_HEADER,
            report.entries.iter().map(|e| {
                csv_line([
                    e.n.to_string(),
                    opt_float(e.closed_ns),
                    opt_float(e.naive_ns),
                    e.naive_extrapolated.to_string(),
                    opt_float(e.deviation),
                ])
            }),
        ),
    };
    let failure = (!report.passed).then(|| report.failures.join("; "));
    Ok(Outcome { body, failure })
}
