//! Scaling measurements for the solver.
//!
//! Times `solve` in auto mode on seeded uniform instances and fits a
//! log-log slope through the per-size medians, which is the number the
//! cubic-growth check in the test suite looks at.

use crate::error::Result;
use crate::gen::{generate_instance, Distribution};
use crate::solver::{solve, SolveMode};
use serde::Serialize;
use std::time::Instant;

/// Median solve time for one instance size.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub median_seconds: f64,
}

/// All measurements plus the fitted growth exponent. `slope` is `None`
/// when only one size was measured, since a single point fits any line.
#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub slope: Option<f64>,
}

/// Run the benchmark: `repeats` seeded instances per size, solved in auto
/// mode, medians fitted by least squares in log-log space.
pub fn run_bench(sizes: &[usize], repeats: usize, v: f64, seed: u64) -> Result<BenchReport> {
    let repeats = repeats.max(1);
    let mut rows = Vec::with_capacity(sizes.len());
    for (si, &n) in sizes.iter().enumerate() {
        let mut times = Vec::with_capacity(repeats);
        for rep in 0..repeats {
            let inst = generate_instance(
                n,
                Distribution::Uniform,
                (1.0, 5.0),
                v,
                seed ^ ((si as u64) << 32) ^ rep as u64,
            )?;
            let start = Instant::now();
            let sol = solve(&inst, SolveMode::Auto)?;
            let elapsed = start.elapsed().as_secs_f64();
            // Keep the objective alive so the solve cannot be elided.
            assert!(sol.objective.is_finite());
            times.push(elapsed);
        }
        times.sort_by(f64::total_cmp);
        let median = if times.len() % 2 == 1 {
            times[times.len() / 2]
        } else {
            0.5 * (times[times.len() / 2 - 1] + times[times.len() / 2])
        };
        rows.push(BenchRow {
            n,
            median_seconds: median,
        });
    }

    let slope = (rows.len() >= 2).then(|| {
        let xs: Vec<f64> = rows.iter().map(|r| (r.n as f64).ln()).collect();
        let ys: Vec<f64> = rows
            .iter()
            .map(|r| r.median_seconds.max(1e-9).ln())
            .collect();
        let mx = xs.iter().sum::<f64>() / xs.len() as f64;
        let my = ys.iter().sum::<f64>() / ys.len() as f64;
        let num: f64 = xs
            .iter()
            .zip(&ys)
            .map(|(x, y)| (x - mx) * (y - my))
            .sum();
        let den: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
        num / den
    });

    Ok(BenchReport { rows, slope })
}
