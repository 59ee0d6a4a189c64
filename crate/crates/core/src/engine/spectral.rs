use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::fft::{self, fast_len, signed_index, Fft2};
use crate::field::{Grid2, ScalarField};
use rustfft::FftDirection;

/// Zero-padded spectrum of a field, ready for Fourier multipliers.
///
/// Padding to at least twice each side keeps the quadratic-phase kernel's
/// wrap-around away from the original support.
pub struct Spectrum {
    grid: Grid2,
    mx: usize,
    my: usize,
    data: Vec<Complex64>,
    xi1: Vec<f64>,
    xi2: Vec<f64>,
}

impl Spectrum {
    pub fn new(q: &ScalarField) -> Self {
        let grid = *q.grid();
        let (nx, ny, h) = (grid.nx(), grid.ny(), grid.spacing());
        let mx = fast_len(2 * nx);
        let my = fast_len(2 * ny);
        let mut data = fft::zero_pad(q.samples(), nx, ny, mx, my);
        Fft2::new(mx, my, FftDirection::Forward).process(&mut data);
        let xi1 = (0..mx).map(|k| 2.0 * PI * signed_index(k, mx) / (mx as f64 * h)).collect();
        let xi2 = (0..my).map(|k| 2.0 * PI * signed_index(k, my) / (my as f64 * h)).collect();
        Self { grid, mx, my, data, xi1, xi2 }
    }

    pub fn grid(&self) -> &Grid2 {
        &self.grid
    }

    /// Angular frequencies along x and y of the padded transform.
    pub fn frequencies(&self) -> (&[f64], &[f64]) {
        (&self.xi1, &self.xi2)
    }

    /// Inverse transform of `spectrum * m(xi1, xi2)`, cropped to the field's grid.
    pub fn apply<M>(&self, m: M) -> ScalarField
    where
        M: Fn(f64, f64) -> Complex64 + Sync,
    {
        let mx = self.mx;
        let mut buf = self.data.clone();
        buf.par_chunks_mut(mx).enumerate().for_each(|(ky, row)| {
            let x2 = self.xi2[ky];
            for (kx, v) in row.iter_mut().enumerate() {
                *v *= m(self.xi1[kx], x2);
            }
        });
        self.finish(buf)
    }

    /// Inverse transform of `spectrum * mx(xi1) * my(xi2)` for tabulated factors.
    pub fn apply_separable(&self, fx: &[Complex64], fy: &[Complex64]) -> ScalarField {
        assert_eq!(fx.len(), self.mx);
        assert_eq!(fy.len(), self.my);
        let mut buf = self.data.clone();
        buf.par_chunks_mut(self.mx).enumerate().for_each(|(ky, row)| {
            for (v, f) in row.iter_mut().zip(fx) {
                *v *= f * fy[ky];
            }
        });
        self.finish(buf)
    }

    fn finish(&self, mut buf: Vec<Complex64>) -> ScalarField {
        fft::inverse_normalized(&mut buf, self.mx, self.my);
        let (nx, ny) = (self.grid.nx(), self.grid.ny());
        let mut out = Vec::with_capacity(nx * ny);
        for j in 0..ny {
            out.extend_from_slice(&buf[j * self.mx..j * self.mx + nx]);
        }
        ScalarField::new(self.grid, out).expect("inverse transform of finite data is finite")
    }
}

/// Symbol of the main term: `e^{-i (xi1^2 - xi2^2) / (4 lambda)}`.
pub fn chirp_factors(spec: &Spectrum, lambda: f64) -> (Vec<Complex64>, Vec<Complex64>) {
    let (xi1, xi2) = spec.frequencies();
    let fx = xi1.iter().map(|x| Complex64::from_polar(1.0, -x * x / (4.0 * lambda))).collect();
    let fy = xi2.iter().map(|x| Complex64::from_polar(1.0, x * x / (4.0 * lambda))).collect();
    (fx, fy)
}

pub(crate) fn spectral_grid(q: &ScalarField, lambda: f64, out: &Grid2) -> ScalarField {
    let spec = Spectrum::new(q);
    let (fx, fy) = chirp_factors(&spec, lambda);
    spec.apply_separable(&fx, &fy).restrict_to(out)
}
