use std::f64::consts::PI;

use num_complex::Complex64;

use super::{RadialProfile, ScalarField};
use crate::error::{Error, Result};

/// `values[k * ntheta + j] = f(center + r_k (cos theta_j, sin theta_j))`,
/// `r_k = k r_max / (nr - 1)`, `theta_j = 2 pi j / ntheta`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolarTable {
    pub center: [f64; 2],
    pub r_max: f64,
    pub nr: usize,
    pub ntheta: usize,
    pub values: Vec<Complex64>,
}

impl PolarTable {
    pub fn radius(&self, k: usize) -> f64 {
        k as f64 * self.r_max / (self.nr - 1) as f64
    }

    pub fn angle(&self, j: usize) -> f64 {
        2.0 * PI * j as f64 / self.ntheta as f64
    }

    pub fn at(&self, k: usize, j: usize) -> Complex64 {
        self.values[k * self.ntheta + j]
    }

    /// Mean over theta at every radius (the angular average).
    pub fn angular_mean(&self) -> Result<RadialProfile> {
        let inv = 1.0 / self.ntheta as f64;
        let means = (0..self.nr)
            .map(|k| {
                let row = &self.values[k * self.ntheta..(k + 1) * self.ntheta];
                crate::summation::pairwise_sum(row) * inv
            })
            .collect();
        RadialProfile::new(self.r_max, means)
    }
}

/// Polar resampling out to the farthest grid corner.
pub fn to_polar(f: &ScalarField, center: [f64; 2], nr: usize, ntheta: usize) -> Result<PolarTable> {
    let r_max = f.grid().max_corner_distance(center);
    to_polar_with_radius(f, center, r_max, nr, ntheta)
}

pub fn to_polar_with_radius(
    f: &ScalarField,
    center: [f64; 2],
    r_max: f64,
    nr: usize,
    ntheta: usize,
) -> Result<PolarTable> {
    if nr < 2 || ntheta < 2 {
        return Err(Error::InvalidParam(format!("polar table needs nr, ntheta >= 2, got {nr}, {ntheta}")));
    }
    if !(r_max.is_finite() && r_max > 0.0) {
        return Err(Error::InvalidParam(format!("r_max must be positive, got {r_max}")));
    }
    let dirs: Vec<(f64, f64)> = (0..ntheta)
        .map(|j| (2.0 * PI * j as f64 / ntheta as f64).sin_cos())
        .collect();
    let mut values = Vec::with_capacity(nr * ntheta);
    for k in 0..nr {
        let r = k as f64 * r_max / (nr - 1) as f64;
        for &(s, c) in &dirs {
            values.push(f.sample_at([center[0] + r * c, center[1] + r * s]));
        }
    }
    Ok(PolarTable { center, r_max, nr, ntheta, values })
}
