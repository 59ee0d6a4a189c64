use std::f64::consts::PI;

use num_complex::Complex64;

use super::ScalarField;
use crate::error::{Error, Result};
use crate::fft;
use crate::summation::pairwise_sum_real;

/// Discrete homogeneous Sobolev norm
/// `(1/4pi^2 sum_xi |xi|^{2s} |f^(xi)|^2 dxi)^{1/2}` from the DFT of the
/// zero-padded samples. The `xi = 0` bin carries weight `|0|^{2s}`, taken
/// as 1 for `s = 0` and 0 otherwise, so `s = 0` is exactly Parseval.
pub fn sobolev_norm(f: &ScalarField, s: f64) -> Result<f64> {
    if !(s > -1.0 && s < 3.0) {
        return Err(Error::SobolevExponent(s));
    }
    let g = f.grid();
    let (nx, ny, h) = (g.nx(), g.ny(), g.spacing());
    let mx = fft::fast_len(2 * nx);
    let my = fft::fast_len(2 * ny);
    let mut buf = fft::zero_pad(f.samples(), nx, ny, mx, my);
    fft::forward(&mut buf, mx, my);
    let dkx = 2.0 * PI / (mx as f64 * h);
    let dky = 2.0 * PI / (my as f64 * h);
    let mut terms = Vec::with_capacity(mx * my);
    for ky in 0..my {
        let xi2 = fft::signed_index(ky, my) * dky;
        for kx in 0..mx {
            let xi1 = fft::signed_index(kx, mx) * dkx;
            let r2 = xi1 * xi1 + xi2 * xi2;
            let w = if r2 == 0.0 {
                if s == 0.0 {
                    1.0
                } else {
                    0.0
                }
            } else {
                r2.powf(s)
            };
            terms.push(w * buf[ky * mx + kx].norm_sqr());
        }
    }
    let total = pairwise_sum_real(&terms) * h * h / (mx * my) as f64;
    Ok(total.sqrt())
}

/// Discrete L2 norm `(sum |f|^2 h^2)^{1/2}`.
pub fn l2_norm(f: &ScalarField) -> f64 {
    let h = f.grid().spacing();
    let sq: Vec<f64> = f.samples().iter().map(Complex64::norm_sqr).collect();
    (pairwise_sum_real(&sq) * h * h).sqrt()
}
