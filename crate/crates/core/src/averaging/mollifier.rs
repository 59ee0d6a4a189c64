use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fft::convolve_with_reach;
use crate::field::ScalarField;

/// Standard bump `exp(-1/(1-|x|^2))` on the unit ball, dilated to radius `sigma`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MollifierSpec {
    pub sigma: f64,
}

impl MollifierSpec {
    pub fn new(sigma: f64) -> Result<Self> {
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::InvalidParam(format!("sigma must be positive, got {sigma}")));
        }
        Ok(Self { sigma })
    }

    /// Unnormalized profile at `|x| / sigma = t`.
    pub fn profile(t: f64) -> f64 {
        if t.abs() >= 1.0 {
            0.0
        } else {
            (-1.0 / (1.0 - t * t)).exp()
        }
    }

    /// Discrete kernel at integer offsets for lattice spacing `h`, summing to 1.
    /// Returned with its reach; index `(dy + reach) * (2 reach + 1) + dx + reach`.
    pub fn kernel(&self, h: f64) -> (usize, Vec<f64>) {
        let reach = (self.sigma / h).floor() as usize;
        let side = 2 * reach + 1;
        let mut w = Vec::with_capacity(side * side);
        for dy in -(reach as isize)..=(reach as isize) {
            for dx in -(reach as isize)..=(reach as isize) {
                let t = h * ((dx * dx + dy * dy) as f64).sqrt() / self.sigma;
                w.push(Self::profile(t));
            }
        }
        let total: f64 = crate::summation::pairwise_sum_real(&w);
        if total > 0.0 {
            for v in &mut w {
                *v /= total;
            }
        } else {
            // Only possible when sigma equals the spacing: the ball holds the centre alone.
            w[reach * side + reach] = 1.0;
        }
        (reach, w)
    }
}

/// `lambda^{-1/4}`.
pub fn sigma_from_lambda(lambda: f64) -> Result<f64> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidParam(format!("lambda must be positive, got {lambda}")));
    }
    Ok(lambda.powf(-0.25))
}

/// 16 log-spaced values from `spacing` to `4 lambda^{-1/4}`. The first entry
/// is the identity mollifier, so the search can always decline to smooth.
pub fn default_sigma_grid(spacing: f64, lambda: f64) -> Vec<f64> {
    let hi = 4.0 * lambda.powf(-0.25);
    if hi <= spacing {
        return vec![spacing];
    }
    let n = 16;
    let ratio = (hi / spacing).ln() / (n - 1) as f64;
    (0..n).map(|k| spacing * (ratio * k as f64).exp()).collect()
}

/// Discrete convolution with the renormalized bump. Values beyond the grid
/// count as zero.
pub fn mollify(f: &ScalarField, m: &MollifierSpec) -> Result<ScalarField> {
    let g = f.grid();
    let h = g.spacing();
    if m.sigma < h * (1.0 - 1e-12) {
        return Err(Error::SigmaTooSmall { sigma: m.sigma, limit: h });
    }
    let (reach, w) = m.kernel(h);
    let side = 2 * reach + 1;
    if w[reach * side + reach] == 1.0 {
        return Ok(f.clone());
    }
    let r = reach as isize;
    let out = convolve_with_reach(f.samples(), g.nx(), g.ny(), reach, reach, |dx, dy| {
        Complex64::new(w[((dy + r) * side as isize + dx + r) as usize], 0.0)
    });
    ScalarField::new(*g, out)
}
