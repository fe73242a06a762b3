//! Timing sweep with a log-log scaling fit.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::generate::{gnp, planted_yes, rng_from_seed};
use crate::graph::Graph;
use crate::recognize::{recognize_with_counts, OpCounts};

/// Instance family for the sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    /// `G(n, p)`. Usually rejected early at these densities.
    Gnp,
    /// Members by construction, so every phase runs to completion.
    PlantedYes,
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    /// Target `m / n`.
    pub density: f64,
    pub seed: u64,
    pub repeats: usize,
    /// Independent instances per size.
    pub instances: usize,
    pub family: Family,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            sizes: vec![500, 1000, 2000, 4000, 8000],
            density: 10.0,
            seed: 1,
            repeats: 3,
            instances: 1,
            family: Family::Gnp,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    /// Seconds per recognition, median over repeats.
    pub seconds: f64,
    pub ops: OpCounts,
    pub member: bool,
}

impl BenchRow {
    /// Instrumented operations per unit of `n * m`.
    pub fn ops_per_nm(&self) -> f64 {
        self.ops.total() as f64 / (self.n as f64 * self.m.max(1) as f64)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub family: Family,
    /// Sorted by `n`, one row per instance.
    pub rows: Vec<BenchRow>,
    /// Slope of `ln(mean seconds)` against `ln(mean n * m)` over sizes;
    /// absent with fewer than two distinct sizes.
    pub exponent: Option<f64>,
}

impl BenchReport {
    pub fn max_ops_per_nm(&self) -> f64 {
        self.rows.iter().map(BenchRow::ops_per_nm).fold(0.0, f64::max)
    }
}

// Each repeat runs enough back-to-back calls to clear the clock resolution.
const MIN_BATCH: Duration = Duration::from_millis(5);

fn instance(family: Family, n: usize, density: f64, seed: u64) -> Graph {
    let p = if n > 1 {
        (2.0 * density / (n as f64 - 1.0)).min(1.0)
    } else {
        0.0
    };
    let mut rng = rng_from_seed(seed);
    match family {
        Family::Gnp => gnp(n, p, &mut rng),
        // deleting edges inside the planted subset removes about 9% of them
        Family::PlantedYes => planted_yes(n, (p / 0.91).min(1.0), &mut rng),
    }
}

fn time_one(g: &Graph, repeats: usize) -> (f64, bool, OpCounts) {
    let (cert, ops) = recognize_with_counts(g);
    let mut times = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let start = Instant::now();
        let mut calls = 0u32;
        while calls == 0 || start.elapsed() < MIN_BATCH {
            std::hint::black_box(recognize_with_counts(std::hint::black_box(g)));
            calls += 1;
        }
        times.push(start.elapsed().as_secs_f64() / f64::from(calls));
    }
    (median(&mut times), cert.is_member(), ops)
}

pub fn run_bench(cfg: &BenchConfig) -> BenchReport {
    let repeats = cfg.repeats.max(1);
    let mut rows = Vec::with_capacity(cfg.sizes.len() * cfg.instances);
    for (i, &n) in cfg.sizes.iter().enumerate() {
        for k in 0..cfg.instances.max(1) {
            let seed = cfg.seed.wrapping_add((i * 1000 + k) as u64);
            let g = instance(cfg.family, n, cfg.density, seed);
            let (seconds, member, ops) = time_one(&g, repeats);
            rows.push(BenchRow {
                n,
                m: g.m(),
                seed,
                seconds,
                ops,
                member,
            });
        }
    }
    rows.sort_by_key(|r| r.n);
    let mut points = Vec::new();
    for group in rows.chunk_by(|a, b| a.n == b.n) {
        let k = group.len() as f64;
        let nm = group.iter().map(|r| r.n as f64 * r.m as f64).sum::<f64>() / k;
        let t = group.iter().map(|r| r.seconds).sum::<f64>() / k;
        if nm > 0.0 && t > 0.0 {
            points.push((nm.ln(), t.ln()));
        }
    }
    BenchReport {
        family: cfg.family,
        exponent: slope(&points),
        rows,
    }
}

pub fn median(xs: &mut [f64]) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

/// Least-squares slope; `None` without two distinct abscissae.
pub fn slope(points: &[(f64, f64)]) -> Option<f64> {
    let k = points.len() as f64;
    if points.len() < 2 {
        return None;
    }
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 1e-12).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_a_power_law() {
        let pts: Vec<(f64, f64)> = [1.0f64, 2.0, 4.0, 8.0]
            .iter()
            .map(|&x| (x.ln(), (3.0 * x * x).ln()))
            .collect();
        assert!((slope(&pts).unwrap() - 2.0).abs() < 1e-9);
        assert_eq!(slope(&pts[..1]), None);
    }

    #[test]
    fn median_of_three_and_four() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn single_size_has_no_exponent() {
        let cfg = BenchConfig {
            sizes: vec![200],
            instances: 2,
            ..BenchConfig::default()
        };
        let r = run_bench(&cfg);
        assert_eq!(r.rows.len(), 2);
        assert!(r.exponent.is_none());
    }

    #[test]
    fn planted_rows_are_members_near_the_target_density() {
        let cfg = BenchConfig {
            sizes: vec![300, 600],
            family: Family::PlantedYes,
            repeats: 1,
            ..BenchConfig::default()
        };
        let r = run_bench(&cfg);
        assert!(r.exponent.is_some());
        for row in &r.rows {
            assert!(row.member);
            let d = row.m as f64 / row.n as f64;
            assert!((7.0..13.0).contains(&d), "{d}");
        }
    }
}
