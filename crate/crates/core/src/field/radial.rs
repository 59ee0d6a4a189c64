use num_complex::Complex64;

use super::{Grid2, ScalarField};
use crate::error::{Error, Result};

/// Samples of a one-variable function at `r_k = k r_max / (nr - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    r_max: f64,
    values: Vec<Complex64>,
}

impl RadialProfile {
    pub fn new(r_max: f64, values: Vec<Complex64>) -> Result<Self> {
        if !(r_max.is_finite() && r_max > 0.0) {
            return Err(Error::InvalidParam(format!("r_max must be positive, got {r_max}")));
        }
        if values.len() < 2 {
            return Err(Error::InvalidParam("a radial profile needs at least 2 samples".into()));
        }
        if let Some(i) = values.iter().position(|z| !(z.re.is_finite() && z.im.is_finite())) {
            return Err(Error::NonFinite(i));
        }
        Ok(Self { r_max, values })
    }

    pub fn from_fn<F: Fn(f64) -> Complex64>(r_max: f64, nr: usize, f: F) -> Result<Self> {
        let step = r_max / (nr.max(2) - 1) as f64;
        Self::new(r_max, (0..nr).map(|k| f(k as f64 * step)).collect())
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn nr(&self) -> usize {
        self.values.len()
    }

    pub fn step(&self) -> f64 {
        self.r_max / (self.values.len() - 1) as f64
    }

    pub fn radius(&self, k: usize) -> f64 {
        k as f64 * self.step()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Linear interpolation in `r`; zero beyond `r_max`.
    pub fn value_at(&self, r: f64) -> Complex64 {
        let r = r.abs();
        if r > self.r_max {
            return Complex64::new(0.0, 0.0);
        }
        let t = r / self.step();
        let k = (t.floor() as usize).min(self.values.len() - 2);
        let w = t - k as f64;
        self.values[k] * (1.0 - w) + self.values[k + 1] * w
    }

    /// The radial function `z -> value_at(|z - center|)` sampled on `grid`.
    pub fn to_field(&self, grid: Grid2, center: [f64; 2]) -> Result<ScalarField> {
        ScalarField::from_fn(grid, |z| self.value_at((z[0] - center[0]).hypot(z[1] - center[1])))
    }

    /// Largest radius carrying a sample with modulus above `tol`.
    pub fn support_end(&self, tol: f64) -> Option<f64> {
        self.values.iter().rposition(|v| v.norm() > tol).map(|k| self.radius(k))
    }

    /// Smallest radius carrying a sample with modulus above `tol`.
    pub fn support_start(&self, tol: f64) -> Option<f64> {
        self.values.iter().position(|v| v.norm() > tol).map(|k| self.radius(k))
    }
}
