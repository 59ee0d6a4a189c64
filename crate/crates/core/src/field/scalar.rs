use num_complex::Complex64;
use rayon::prelude::*;

use super::Grid2;
use crate::error::{Error, Result};

/// Complex samples of a function on a [`Grid2`], row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    grid: Grid2,
    samples: Vec<Complex64>,
}

impl ScalarField {
    pub fn new(grid: Grid2, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.len() {
            return Err(Error::SampleCount { expected: grid.len(), got: samples.len() });
        }
        if let Some(i) = samples.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { grid, samples })
    }

    pub fn zeros(grid: Grid2) -> Self {
        Self { grid, samples: vec![Complex64::new(0.0, 0.0); grid.len()] }
    }

    /// Samples `f` at every node. Rows are filled in parallel.
    pub fn from_fn<F>(grid: Grid2, f: F) -> Result<Self>
    where
        F: Fn([f64; 2]) -> Complex64 + Sync,
    {
        let nx = grid.nx();
        let mut samples = vec![Complex64::new(0.0, 0.0); grid.len()];
        samples.par_chunks_mut(nx).enumerate().for_each(|(j, row)| {
            for (i, v) in row.iter_mut().enumerate() {
                *v = f(grid.node(i, j));
            }
        });
        Self::new(grid, samples)
    }

    pub fn grid(&self) -> &Grid2 {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<Complex64> {
        self.samples
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> Complex64 {
        self.samples[self.grid.index(i, j)]
    }

    /// Bilinear interpolation of the four surrounding samples; zero outside
    /// the grid hull.
    pub fn sample_at(&self, p: [f64; 2]) -> Complex64 {
        let g = &self.grid;
        let fx = snap((p[0] - g.origin()[0]) / g.spacing());
        let fy = snap((p[1] - g.origin()[1]) / g.spacing());
        let (nx, ny) = (g.nx(), g.ny());
        if !(fx >= 0.0 && fy >= 0.0 && fx <= (nx - 1) as f64 && fy <= (ny - 1) as f64) {
            return Complex64::new(0.0, 0.0);
        }
        let i0 = (fx.floor() as usize).min(nx - 2);
        let j0 = (fy.floor() as usize).min(ny - 2);
        let tx = fx - i0 as f64;
        let ty = fy - j0 as f64;
        let a = self.at(i0, j0);
        let b = self.at(i0 + 1, j0);
        let c = self.at(i0, j0 + 1);
        let d = self.at(i0 + 1, j0 + 1);
        (a * (1.0 - tx) + b * tx) * (1.0 - ty) + (c * (1.0 - tx) + d * tx) * ty
    }

    /// `alpha * self + beta * other` on a shared grid.
    pub fn combine(&self, alpha: Complex64, other: &ScalarField, beta: Complex64) -> Result<Self> {
        self.check_same_grid(other)?;
        let samples = self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| alpha * a + beta * b)
            .collect();
        Self::new(self.grid, samples)
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        Self {
            grid: self.grid,
            samples: self.samples.iter().map(|v| v * c).collect(),
        }
    }

    pub fn map<F: Fn(Complex64) -> Complex64>(&self, f: F) -> Result<Self> {
        Self::new(self.grid, self.samples.iter().map(|&v| f(v)).collect())
    }

    pub fn check_same_grid(&self, other: &ScalarField) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(format!("{:?} vs {:?}", self.grid, other.grid)));
        }
        Ok(())
    }

    /// Samples at the nodes of `coarse`, picked directly when `coarse` is
    /// nested in this grid and bilinearly interpolated otherwise.
    pub fn restrict_to(&self, coarse: &Grid2) -> Self {
        let samples = match coarse.nesting_in(&self.grid) {
            Some(nest) => {
                let mut v = Vec::with_capacity(coarse.len());
                for j in 0..coarse.ny() {
                    for i in 0..coarse.nx() {
                        let (fi, fj) = nest.fine_index(i, j);
                        v.push(self.at(fi, fj));
                    }
                }
                v
            }
            None => coarse.nodes().map(|p| self.sample_at(p)).collect(),
        };
        Self { grid: *coarse, samples }
    }

    /// Minimum and maximum of the real part.
    pub fn real_range(&self) -> (f64, f64) {
        self.samples
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), z| (lo.min(z.re), hi.max(z.re)))
    }

    pub fn max_abs_diff(&self, other: &ScalarField) -> Result<f64> {
        self.check_same_grid(other)?;
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    pub fn sup_norm(&self) -> f64 {
        self.samples.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

/// Lattice coordinates within rounding noise of a node are treated as exact
/// so that sampling at nodes returns the stored samples.
#[inline]
fn snap(t: f64) -> f64 {
    let r = t.round();
    if (t - r).abs() < 1e-9 {
        r
    } else {
        t
    }
}
