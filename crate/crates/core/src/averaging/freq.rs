use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::engine::{check_resolution, main_term_grid, EngineConfig, EngineKind, PhaseContext, Spectrum};
use crate::error::{Error, Result};
use crate::field::{Grid2, ScalarField};
use crate::summation::pairwise_sum_by;

/// Minimum lattice samples inside `[lambda, 2 lambda]`.
pub const MIN_SAMPLES: usize = 32;

/// Samples of a map `t -> F(t)` at `t0 + k dt`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledMap {
    pub t0: f64,
    pub dt: f64,
    pub values: Vec<Complex64>,
}

impl SampledMap {
    pub fn from_fn<F: Fn(f64) -> Complex64>(t0: f64, dt: f64, n: usize, f: F) -> Self {
        Self { t0, dt, values: (0..n).map(|k| f(t0 + k as f64 * dt)).collect() }
    }

    pub fn t_max(&self) -> f64 {
        self.t0 + self.dt * (self.values.len().saturating_sub(1)) as f64
    }

    /// Linear interpolation; `t` must lie in the lattice's range.
    fn at(&self, t: f64) -> Complex64 {
        let u = ((t - self.t0) / self.dt).max(0.0);
        let k = (u.floor() as usize).min(self.values.len() - 2);
        let frac = (u - k as f64).min(1.0);
        self.values[k] * (1.0 - frac) + self.values[k + 1] * frac
    }
}

/// `(1/lambda) * integral of F over [lambda, 2 lambda]`, trapezoid on the
/// lattice nodes inside the interval plus interpolated end points.
pub fn freq_average(f: &SampledMap, lambda: f64) -> Result<Complex64> {
    let (lo, hi) = (lambda, 2.0 * lambda);
    let tol = 1e-9 * f.dt;
    if !(f.dt > 0.0) || f.values.len() < 2 || f.t0 > lo + tol || f.t_max() < hi - tol {
        return Err(Error::Coverage { lo, hi, min: MIN_SAMPLES });
    }
    let first = ((lo - f.t0) / f.dt - 1e-9).ceil().max(0.0) as usize;
    let last = (((hi - f.t0) / f.dt + 1e-9).floor() as usize).min(f.values.len() - 1);
    if last < first || last - first + 1 < MIN_SAMPLES {
        return Err(Error::Coverage { lo, hi, min: MIN_SAMPLES });
    }
    let node = |k: usize| f.t0 + k as f64 * f.dt;
    // Knots: lo, interior lattice nodes, hi.
    let mut knots: Vec<(f64, Complex64)> = Vec::with_capacity(last - first + 3);
    knots.push((lo, f.at(lo)));
    for k in first..=last {
        let t = node(k);
        if (t - lo).abs() > tol && (t - hi).abs() > tol {
            knots.push((t, f.values[k]));
        }
    }
    knots.push((hi, f.at(hi)));
    let integral = pairwise_sum_by(knots.len() - 1, |m| {
        let ((ta, fa), (tb, fb)) = (knots[m], knots[m + 1]);
        (fa + fb) * (0.5 * (tb - ta))
    });
    Ok(integral / lambda)
}

/// Lattice of the `depth`-fold average at `lambda`: step `lambda / 32` over
/// `[lambda, 2^depth lambda]`. Returns `(dt, weights)` with
/// `A^depth[F](lambda) = sum_j weights[j] F(lambda + j dt)`.
pub fn iterated_weights(lambda: f64, depth: usize) -> Result<(f64, Vec<f64>)> {
    PhaseContext::new([0.0, 0.0], lambda)?;
    let steps = MIN_SAMPLES;
    let dt = lambda / steps as f64;
    let n = steps * ((1usize << depth) - 1) + 1;
    // Propagate a unit mass at lambda backwards through the averages: each
    // application at node t = lambda + i dt spreads trapezoid weights over
    // [t, 2t], which is exactly nodes i .. 2i + steps.
    let mut w = vec![0.0; n];
    w[0] = 1.0;
    let mut reach = 1;
    for _ in 0..depth {
        let mut next = vec![0.0; n];
        for i in 0..reach {
            let mass = w[i];
            if mass == 0.0 {
                continue;
            }
            let t = lambda + i as f64 * dt;
            let (a, b) = (i, 2 * i + steps);
            for j in a..=b {
                let tw = if j == a || j == b { 0.5 } else { 1.0 };
                next[j] += mass * tw * dt / t;
            }
        }
        reach = 2 * (reach - 1) + steps + 1;
        w = next;
    }
    w.truncate(reach.min(n));
    Ok((dt, w))
}

/// `A_freq^depth` applied to `F` sampled at the lattice of [`iterated_weights`].
pub fn freq_average_iterated(f: &SampledMap, lambda: f64, depth: usize) -> Result<Complex64> {
    if depth == 0 {
        return Ok(f.at(lambda));
    }
    let (dt, w) = iterated_weights(lambda, depth)?;
    let hi = lambda + dt * (w.len() - 1) as f64;
    if f.t0 > lambda + 1e-9 * dt || f.t_max() < hi - 1e-9 * dt {
        return Err(Error::Coverage { lo: lambda, hi, min: MIN_SAMPLES });
    }
    Ok(pairwise_sum_by(w.len(), |j| f.at(lambda + j as f64 * dt) * w[j]))
}

/// Frequency-averaged main term `A_freq^depth[t -> T^t[q]](lambda)` on `out`.
///
/// The spectral engine folds the weights into a single multiplier; the
/// quadrature engines evaluate every lattice frequency.
pub fn freq_average_recon(
    q: &ScalarField,
    lambda: f64,
    depth: usize,
    out: &Grid2,
    cfg: &EngineConfig,
) -> Result<ScalarField> {
    let (dt, w) = iterated_weights(lambda, depth)?;
    let ts: Vec<f64> = (0..w.len()).map(|j| lambda + j as f64 * dt).collect();
    if !out.inside(q.grid()) {
        return Err(Error::GridMismatch("output grid leaves the input hull".into()));
    }
    match cfg.engine {
        EngineKind::Spectral => {
            let spec = Spectrum::new(q);
            let f = spec.apply(|x1, x2| {
                let hq = x1 * x1 - x2 * x2;
                pairwise_sum_by(w.len(), |j| Complex64::from_polar(w[j], -hq / (4.0 * ts[j])))
            });
            Ok(f.restrict_to(out))
        }
        _ => {
            check_resolution(q.grid(), *ts.last().expect("nonempty lattice"))?;
            let mut acc = ScalarField::zeros(*out);
            for (t, wj) in ts.iter().zip(&w) {
                let tj = main_term_grid(q, *t, out, cfg)?;
                acc = acc.combine(Complex64::new(1.0, 0.0), &tj, Complex64::new(*wj, 0.0))?;
            }
            Ok(acc)
        }
    }
}
