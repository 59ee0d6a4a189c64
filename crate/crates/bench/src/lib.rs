//! Timing harness comparing the main-term engines on one job.
//!
//! The naive engine costs `O(N_in * N_out)` cis evaluations; at desk scale a
//! full 2048-squared to 200-squared run takes the better part of an hour, so
//! its time is measured on a deterministic sample of output nodes and scaled
//! to the full grid.

use std::time::Instant;

use bklab_core::engine::{main_term_grid, main_term_point, EngineConfig, EngineKind, PhaseContext};
use bklab_core::{Complex64, Grid2, Result, ScalarField};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BenchJob {
    pub input_size: usize,
    pub output_size: usize,
    pub lambda: f64,
    pub half_width: f64,
    /// Width of the Gaussian potential.
    pub width: f64,
}

impl BenchJob {
    pub fn new(input_size: usize, output_size: usize, lambda: f64) -> Self {
        Self { input_size, output_size, lambda, half_width: 1.0, width: 0.25 }
    }

    pub fn input_grid(&self) -> Result<Grid2> {
        Grid2::centered_square(self.half_width, self.input_size)
    }

    pub fn output_grid(&self) -> Result<Grid2> {
        Grid2::centered_square(self.half_width, self.output_size)
    }

    pub fn potential(&self) -> Result<ScalarField> {
        let w2 = self.width * self.width;
        ScalarField::from_fn(self.input_grid()?, |z| Complex64::new((-(z[0] * z[0] + z[1] * z[1]) / w2).exp(), 0.0))
    }
}

/// Output nodes visited by the sampled naive timing: `count` indices spread
/// evenly over the grid in storage order.
pub fn sample_nodes(out: &Grid2, count: usize) -> Vec<(usize, usize)> {
    let n = out.len();
    let count = count.clamp(1, n);
    (0..count)
        .map(|k| {
            let idx = (k * n + n / 2) / count;
            (idx % out.nx(), idx / out.nx())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EngineTiming {
    pub engine: &'static str,
    pub seconds: f64,
    /// Output nodes actually evaluated.
    pub evaluated: usize,
    /// Whether `seconds` is scaled up from a node sample.
    pub extrapolated: bool,
}

/// Wall time of a full grid evaluation.
pub fn time_full(job: &BenchJob, q: &ScalarField, engine: EngineKind) -> Result<(EngineTiming, ScalarField)> {
    let out = job.output_grid()?;
    let t = Instant::now();
    let f = main_term_grid(q, job.lambda, &out, &EngineConfig::new(engine))?;
    let seconds = t.elapsed().as_secs_f64();
    Ok((EngineTiming { engine: engine.name(), seconds, evaluated: out.len(), extrapolated: false }, f))
}

/// Naive point quadrature at the sampled nodes, scaled to the full grid.
pub fn time_naive_sampled(job: &BenchJob, q: &ScalarField, nodes: &[(usize, usize)]) -> Result<(EngineTiming, Vec<Complex64>)> {
    let out = job.output_grid()?;
    let cfg = EngineConfig::new(EngineKind::Naive);
    let t = Instant::now();
    let values = nodes
        .par_iter()
        .map(|&(i, j)| main_term_point(q, &PhaseContext::new(out.node(i, j), job.lambda)?, &cfg))
        .collect::<Result<Vec<_>>>()?;
    let seconds = t.elapsed().as_secs_f64() * out.len() as f64 / nodes.len() as f64;
    Ok((EngineTiming { engine: "naive", seconds, evaluated: nodes.len(), extrapolated: true }, values))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpeedupReport {
    pub job: BenchJob,
    pub spectral: EngineTiming,
    pub naive: EngineTiming,
    pub speedup: f64,
    /// Largest spectral-vs-naive difference over the sampled nodes.
    pub max_diff: f64,
}

impl SpeedupReport {
    pub fn render(&self) -> String {
        format!(
            "input {}^2 -> output {}^2, lambda {}\n  spectral {:>10.3} s (full grid)\n  naive    {:>10.3} s ({} of {} nodes, scaled)\n  speedup  {:>10.1}x, max diff on sampled nodes {:.3e}",
            self.job.input_size,
            self.job.output_size,
            self.job.lambda,
            self.spectral.seconds,
            self.naive.seconds,
            self.naive.evaluated,
            self.job.output_size * self.job.output_size,
            self.speedup,
            self.max_diff
        )
    }
}

/// Spectral full-grid time against sampled-and-scaled naive time on the same
/// job, with their agreement on the sampled nodes.
pub fn compare_spectral_naive(job: &BenchJob, samples: usize) -> Result<SpeedupReport> {
    let q = job.potential()?;
    let (spectral, field) = time_full(job, &q, EngineKind::Spectral)?;
    let nodes = sample_nodes(&job.output_grid()?, samples);
    let (naive, values) = time_naive_sampled(job, &q, &nodes)?;
    let max_diff = nodes
        .iter()
        .zip(&values)
        .map(|(&(i, j), v)| (field.at(i, j) - v).norm())
        .fold(0.0, f64::max);
    Ok(SpeedupReport { job: *job, speedup: naive.seconds / spectral.seconds, spectral, naive, max_diff })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_distinct_and_in_range() {
        let g = Grid2::centered_square(1.0, 50).unwrap();
        let s = sample_nodes(&g, 37);
        assert_eq!(s.len(), 37);
        let mut idx: Vec<usize> = s.iter().map(|&(i, j)| g.index(i, j)).collect();
        idx.dedup();
        assert_eq!(idx.len(), 37);
        assert!(s.iter().all(|&(i, j)| i < 50 && j < 50));
    }

    #[test]
    fn small_job_agrees() {
        let job = BenchJob::new(129, 17, 10.0);
        let r = compare_spectral_naive(&job, 8).unwrap();
        assert!(r.max_diff < 1e-3, "{}", r.render());
        assert!(r.naive.extrapolated && !r.spectral.extrapolated);
    }
}
